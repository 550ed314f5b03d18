#pragma once

#include "mincone/coefficient.hpp"

#include <vector>

namespace mincone {

// Dense square-or-rectangular matrix with exact field entries.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(int n);
    static Matrix zero(int n) { return Matrix(n, n); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Coefficient& at(int i, int j) { return data_[i * cols_ + j]; }
    const Coefficient& at(int i, int j) const { return data_[i * cols_ + j]; }
    const std::vector<Coefficient>& data() const { return data_; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Coefficient& c) const;
    Matrix transpose() const;
    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    Coefficient trace() const;
    bool is_symmetric() const;
    bool is_zero() const;

    // Gauss-Jordan over the field; throws std::domain_error when singular.
    Matrix inverse() const;

    bool is_orthogonal() const;

    // Place `block` with its top-left corner at (i, j).
    void set_block(int i, int j, const Matrix& block);

private:
    int rows_, cols_;
    std::vector<Coefficient> data_;
};

// Exactly orthogonal matrix from the Cayley transform (I-S)(I+S)^{-1}
// of a seeded random rational skew-symmetric S. Deterministic per seed.
Matrix rational_orthogonal(std::uint64_t seed, int dim);

} // namespace mincone
