#pragma once

#include "equirank/rational.hpp"

#include <cassert>
#include <cstddef>
#include <optional>

namespace equirank {

/// Dense matrix over exact rationals, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    const Rat& at(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    bool is_zero() const;
    bool operator==(const Matrix& other) const;

    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    // Zero entries of either factor are skipped; generator matrices and
    // weight vectors are sparse in practice.
    Matrix operator*(const Matrix& other) const;
    Matrix operator*(const Rat& scalar) const;

    Matrix& add_scaled(const Rat& scalar, const Matrix& other);
    Matrix transpose() const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

/// Reduced row echelon form plus pivot columns.
struct Echelon {
    Matrix mat;
    std::vector<std::size_t> pivots;
};

Echelon rref(Matrix m);

/// Rank by plain rational Gauss-Jordan. Kept as the independent
/// cross-check against the fraction-free elimination in ranklab.
std::size_t rank_gauss(const Matrix& m);

/// Reduced basis of the right kernel {x : m x = 0}.
std::vector<RatVec> nullspace(const Matrix& m);

/// One solution of m x = b, if any.
std::optional<RatVec> solve_linear(const Matrix& m, const RatVec& b);

}  // namespace equirank
