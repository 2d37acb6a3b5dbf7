#include "equirank/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace equirank {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const {
    for (const Rat& x : data_)
        if (x != 0) return false;
    return true;
}

bool Matrix::operator==(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t t = 0; t < data_.size(); ++t)
        if (data_[t] != other.data_[t]) return false;
    return true;
}

Matrix Matrix::operator+(const Matrix& other) const {
    assert(rows_ == other.rows_ && cols_ == other.cols_);
    Matrix out(rows_, cols_);
    for (std::size_t t = 0; t < data_.size(); ++t)
        out.data_[t] = data_[t] + other.data_[t];
    return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
    assert(rows_ == other.rows_ && cols_ == other.cols_);
    Matrix out(rows_, cols_);
    for (std::size_t t = 0; t < data_.size(); ++t)
        out.data_[t] = data_[t] - other.data_[t];
    return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
    assert(cols_ == other.rows_);
    Matrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Rat& b = other.at(k, j);
                if (b == 0) continue;
                out.at(i, j) += a * b;
            }
        }
    }
    return out;
}

Matrix Matrix::operator*(const Rat& scalar) const {
    Matrix out(rows_, cols_);
    for (std::size_t t = 0; t < data_.size(); ++t)
        out.data_[t] = data_[t] * scalar;
    return out;
}

Matrix& Matrix::add_scaled(const Rat& scalar, const Matrix& other) {
    assert(rows_ == other.rows_ && cols_ == other.cols_);
    if (scalar != 0)
        for (std::size_t t = 0; t < data_.size(); ++t)
            if (other.data_[t] != 0) data_[t] += scalar * other.data_[t];
    return *this;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "[") << at(i, j).get_str();
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

Echelon rref(Matrix m) {
    Echelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                swap(m.at(piv, j), m.at(r, j));
        Rat inv = 1 / m.at(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.mat = std::move(m);
    return out;
}

std::size_t rank_gauss(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<RatVec> nullspace(const Matrix& m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        RatVec v(m.cols());
        v[c] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = -e.mat.at(r, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVec> solve_linear(const Matrix& m, const RatVec& b) {
    assert(b.size() == m.rows());
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    Echelon e = rref(std::move(aug));
    RatVec x(m.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == m.cols()) return std::nullopt;  // inconsistent
        x[e.pivots[r]] = e.mat.at(r, m.cols());
    }
    return x;
}

}  // namespace equirank
