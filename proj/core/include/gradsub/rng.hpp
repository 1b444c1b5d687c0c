#pragma once

#include <bit>
#include <cstdint>

namespace gradsub {

// splitmix64, used only to expand seeds into generator state.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(uint64_t seed) noexcept : state_(seed) {}

    constexpr uint64_t next() noexcept {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    uint64_t state_;
};

// xoshiro256++ seeded through splitmix64. A (seed, stream) pair fully
// determines the sequence; fixed stream ids keep training data, probe data
// and parameter initialization on provably disjoint streams even when the
// user picks identical seeds.
class Rng {
public:
    enum Stream : uint64_t {
        kModelInit = 1,
        kPretrainData = 2,
        kTrainActionData = 3,
        kTrainGroundingData = 4,
        kProbeGroundingData = 5,
        kProbeActionData = 6,
        kGeneric = 7,
    };

    explicit Rng(uint64_t seed, uint64_t stream = kGeneric) noexcept {
        SplitMix64 sm(seed ^ (stream * 0x9e3779b97f4a7c15ULL));
        for (auto& s : state_) s = sm.next();
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    uint64_t next() noexcept {
        const uint64_t result = std::rotl(state_[0] + state_[3], 23) + state_[0];
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = std::rotl(state_[3], 45);
        return result;
    }

    // 53-bit uniform in [0, 1).
    double uniform01() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform01(); }

    // Unbiased integer in [0, n), n >= 1 (Lemire with rejection).
    uint64_t below(uint64_t n) noexcept {
        __uint128_t m = static_cast<__uint128_t>(next()) * n;
        auto lo = static_cast<uint64_t>(m);
        if (lo < n) {
            const uint64_t t = (0 - n) % n;
            while (lo < t) {
                m = static_cast<__uint128_t>(next()) * n;
                lo = static_cast<uint64_t>(m);
            }
        }
        return static_cast<uint64_t>(m >> 64);
    }

    bool coin() noexcept { return (next() >> 63) != 0; }

private:
    uint64_t state_[4];
};

} // namespace gradsub
