#pragma once

#include <stdexcept>
#include <string>

namespace gradsub {

// Error categories double as CLI exit codes: 0 success, 2 input/format
// error, 3 dimension mismatch, 4 degenerate subspace, 5 numerical failure.
enum class errc : int {
    ok = 0,
    input_error = 2,
    dimension_mismatch = 3,
    empty_subspace = 4,
    numerical_failure = 5,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }
    int exit_code() const noexcept { return static_cast<int>(code_); }

private:
    errc code_;
};

// Malformed files, bad config keys/values, bad CLI arguments.
struct FormatError : Error {
    explicit FormatError(const std::string& what) : Error(errc::input_error, what) {}
};

// Incompatible shapes (e.g. gradient matrices with different row counts).
struct DimensionError : Error {
    explicit DimensionError(const std::string& what) : Error(errc::dimension_mismatch, what) {}
};

// Rank-zero input where a subspace is required (vanished probe gradient).
struct EmptySubspaceError : Error {
    explicit EmptySubspaceError(const std::string& what) : Error(errc::empty_subspace, what) {}
};

// SVD non-convergence, NaN training loss, cosines outside [0,1] by more
// than roundoff.
struct NumericalError : Error {
    explicit NumericalError(const std::string& what) : Error(errc::numerical_failure, what) {}
};

} // namespace gradsub
