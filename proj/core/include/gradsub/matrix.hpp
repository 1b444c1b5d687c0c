#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "gradsub/errors.hpp"

namespace gradsub {

// Dense row-major matrix of binary64 values. Construction validates that
// dimensions are positive, the buffer length matches, and every entry is
// finite.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols); // zero-filled
    Matrix(int rows, int cols, std::vector<double> data);

    static Matrix identity(int n);
    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return data_.size(); }

    double& operator()(int i, int j) noexcept { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const noexcept { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    double* data() noexcept { return data_.data(); }
    const double* data() const noexcept { return data_.data(); }

    bool same_bits(const Matrix& other) const noexcept;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);      // A * B
Matrix multiply_at_b(const Matrix& a, const Matrix& b); // A^T * B
Matrix multiply_a_bt(const Matrix& a, const Matrix& b); // A * B^T
Matrix transpose(const Matrix& a);
Matrix add(const Matrix& a, const Matrix& b);
Matrix subtract(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, double c);

double frobenius_norm(const Matrix& a);
double max_abs_diff(const Matrix& a, const Matrix& b);
// tr(A * B) without forming the product; A is m x n, B is n x m.
double trace_of_product(const Matrix& a, const Matrix& b);

} // namespace gradsub
