#include "equirank/matrix.hpp"
#include "equirank/ranklab.hpp"

#include <doctest.h>

using namespace equirank;

namespace {

Matrix from_rows(std::vector<std::vector<long>> rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

}  // namespace

TEST_CASE("rref and rank on small matrices") {
    CHECK(rank_gauss(Matrix::identity(4)) == 4);
    CHECK(rank_gauss(Matrix(3, 5)) == 0);
    Matrix m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(rank_gauss(m) == 2);
    Echelon e = rref(m);
    CHECK(e.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("nullspace vectors are annihilated") {
    Matrix m = from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
    auto basis = nullspace(m);
    CHECK(basis.size() == 1);
    for (const RatVec& v : basis)
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Rat s = 0;
            for (std::size_t j = 0; j < m.cols(); ++j) s += m.at(i, j) * v[j];
            CHECK(s == 0);
        }
}

TEST_CASE("solve_linear") {
    Matrix m = from_rows({{2, -1}, {-1, 2}});
    auto x = solve_linear(m, {Rat(1), Rat(1)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 1);
    // inconsistent system
    Matrix s = from_rows({{1, 1}, {1, 1}});
    CHECK(!solve_linear(s, {Rat(0), Rat(1)}).has_value());
}

TEST_CASE("fraction-free rank agrees with rational elimination on random matrices") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t rows = 1 + rng.next() % 6, cols = 1 + rng.next() % 6;
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m.at(i, j) = frac(rng.uniform(9), 1 + (rng.next() % 4));
        CHECK(rank_exact(m) == rank_gauss(m));
    }
}

TEST_CASE("rank_exact basics") {
    CHECK(rank_exact(Matrix::identity(7)) == 7);
    CHECK(rank_exact(Matrix(4, 4)) == 0);
    Matrix m(2, 3);
    m.at(0, 0) = frac(1, 2);
    m.at(1, 0) = frac(1, 3);
    m.at(0, 2) = 5;
    CHECK(rank_exact(m) == 2);
}
