#include "equirank/irrep.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace equirank;

namespace {

RootSystem rs_of(const char* name) { return RootSystem(RootSystemSpec::parse(name)); }

void check_module_laws(const WeightModule& m, bool irreducible = true) {
    CAPTURE(m.rs.spec().name());
    CAPTURE(m.highest_weight.to_string());
    CHECK(oracle::check_commutation(m));
    CHECK(oracle::check_weyl_symmetry(m));
    CHECK(oracle::check_root_strings(m));
    if (irreducible) {
        CHECK(oracle::check_dim(m));
        CHECK(oracle::check_support_law(m));
        CHECK(oracle::check_cyclicity(m));
        CHECK(m.weight_space(m.highest_weight).size() == 1);
        for (const Weight& w : m.distinct_weights())
            CHECK(dominance_leq(m.rs, w, m.highest_weight).leq);
    }
}

}  // namespace

TEST_CASE("closed-form sl2 modules") {
    WeightModule v0 = build_sl2(0);
    CHECK(v0.dim() == 1);
    CHECK(v0.E[0].is_zero());
    CHECK(v0.F[0].is_zero());

    // e v_{-1} = 1*(1-1+1) v_1 and e v_{-2} = 2*(2-2+1) v_0
    WeightModule v1 = build_sl2(1);
    CHECK(v1.E[0].at(0, 1) == 1);
    WeightModule v2 = build_sl2(2);
    CHECK(v2.E[0].at(1, 2) == 2);
    CHECK(v2.weights == std::vector<Weight>{Weight({2}), Weight({0}), Weight({-2})});

    for (long n : {0L, 1L, 2L, 5L}) check_module_laws(build_sl2(n));
}

TEST_CASE("build_irrep dimensions and weights") {
    RootSystem a2 = rs_of("A2");
    WeightModule m = build_irrep(a2, Weight({1, 0}));
    CHECK(m.dim() == 3);
    for (Weight w : {Weight({1, 0}), Weight({-1, 1}), Weight({0, -1})})
        CHECK(weight_multiplicity(m, w) == 1);

    for (long n = 0; n <= 8; ++n) CHECK(build_irrep(rs_of("A1"), Weight({n})).dim() == n + 1);
    CHECK(build_irrep(rs_of("G2"), Weight({1, 0})).dim() == 7);
    CHECK(build_irrep(rs_of("G2"), Weight({0, 1})).dim() == 14);
    CHECK(build_irrep(rs_of("B2"), Weight({0, 2})).dim() == 10);
    CHECK(build_irrep(rs_of("C2"), Weight({0, 1})).dim() == 5);
    CHECK(build_irrep(rs_of("A3"), Weight({1, 0, 1})).dim() == 15);
    CHECK(build_irrep(rs_of("D4"), Weight({1, 0, 0, 0})).dim() == 8);

    CHECK_THROWS_AS(build_irrep(a2, Weight({-1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(build_irrep(rs_of("A1"), Weight({100}), 50), std::length_error);
}

TEST_CASE("module laws across types") {
    for (auto [name, coords] : std::vector<std::pair<const char*, Weight>>{
             {"A2", Weight({1, 1})},
             {"A2", Weight({2, 1})},
             {"B2", Weight({1, 1})},
             {"C2", Weight({2, 0})},
             {"G2", Weight({1, 0})},
             {"A3", Weight({0, 1, 0})},
         })
        check_module_laws(build_irrep(rs_of(name), coords));
}

TEST_CASE("weyl_dim closed values") {
    CHECK(weyl_dim(rs_of("G2"), Weight({0, 0})) == 1);
    for (long n : {0L, 3L, 11L}) CHECK(weyl_dim(rs_of("A1"), Weight({n})) == n + 1);
    CHECK(weyl_dim(rs_of("A2"), Weight({1, 1})) == 8);
    CHECK(weyl_dim(rs_of("A2"), Weight({3, 0})) == 10);
    CHECK(weyl_dim(rs_of("B2"), Weight({1, 0})) == 5);
    CHECK(weyl_dim(rs_of("G2"), Weight({3, 0})) == 77);
}

TEST_CASE("weight multiplicities") {
    RootSystem a2 = rs_of("A2");
    WeightModule adj = build_irrep(a2, Weight({1, 1}));
    CHECK(weight_multiplicity(adj, Weight({1, 1})) == 1);
    CHECK(weight_multiplicity(adj, Weight::zero(2)) == 2);
    CHECK(weight_multiplicity(adj, Weight({7, 7})) == 0);

    // mult at nu - alpha_i is 1 iff <nu, coroot_i> != 0
    for (auto [name, nu] : std::vector<std::pair<const char*, Weight>>{
             {"A2", Weight({2, 0})}, {"B2", Weight({0, 1})}, {"G2", Weight({1, 0})}}) {
        RootSystem rs = rs_of(name);
        WeightModule m = build_irrep(rs, nu);
        for (int i = 0; i < rs.rank(); ++i)
            CHECK(weight_multiplicity(m, nu - rs.simple_root(i)) == (nu[i] != 0 ? 1 : 0));
    }
}

TEST_CASE("weight multiplicities against the contravariant-form oracle") {
    for (auto [name, top] : std::vector<std::pair<const char*, Weight>>{
             {"A2", Weight({1, 1})}, {"A2", Weight({2, 1})}, {"B2", Weight({1, 1})},
             {"G2", Weight({1, 0})}}) {
        RootSystem rs = rs_of(name);
        WeightModule m = build_irrep(rs, top);
        for (const Weight& gamma : m.distinct_weights()) {
            auto want = oracle::shapovalov_multiplicity(rs, top, gamma);
            if (want) CHECK(weight_multiplicity(m, gamma) == *want);
        }
    }
    // a weight outside the support
    CHECK(oracle::shapovalov_multiplicity(rs_of("A1"), Weight({2}), Weight({3})) == 0);
}

TEST_CASE("root strings") {
    WeightModule v0 = build_sl2(0);
    RootString s = root_string(v0, Weight({0}), v0.rs.positive_roots()[0]);
    CHECK(s.p == 0);
    CHECK(s.q == 0);

    WeightModule v2 = build_sl2(2);
    RootString mid = root_string(v2, Weight({0}), v2.rs.positive_roots()[0]);
    CHECK(mid.p == 1);
    CHECK(mid.q == 1);
    CHECK_THROWS_AS(root_string(v2, Weight({1}), v2.rs.positive_roots()[0]), std::invalid_argument);

    // top of the module: p = 0 and q = the coroot pairing, for simple roots
    for (auto [name, top] : std::vector<std::pair<const char*, Weight>>{
             {"A2", Weight({2, 1})}, {"B2", Weight({1, 1})}, {"G2", Weight({1, 0})}}) {
        RootSystem rs = rs_of(name);
        WeightModule m = build_irrep(rs, top);
        for (int i = 0; i < rs.rank(); ++i) {
            RootString str = root_string(m, top, rs.positive_roots()[static_cast<std::size_t>(i)]);
            const PositiveRoot& alpha = rs.positive_roots()[static_cast<std::size_t>(i)];
            if (alpha.height() == 1) {
                CHECK(str.p == 0);
                long idx = -1;
                for (int t = 0; t < rs.rank(); ++t)
                    if (rs.simple_root(t) == alpha.fundamental) idx = t;
                REQUIRE(idx >= 0);
                CHECK(str.q == top[static_cast<int>(idx)]);
            }
        }
    }
}

TEST_CASE("dual modules") {
    RootSystem a1 = rs_of("A1");
    WeightModule v3 = build_irrep(a1, Weight({3}));
    WeightModule v3d = dual_module(v3);
    CHECK(v3d.highest_weight == Weight({3}));
    for (const Weight& w : v3.distinct_weights())
        CHECK(weight_multiplicity(v3d, w) == weight_multiplicity(v3, w));

    RootSystem a2 = rs_of("A2");
    WeightModule w1 = build_irrep(a2, Weight({1, 0}));
    WeightModule w1d = dual_module(w1);
    CHECK(w1d.highest_weight == Weight({0, 1}));
    check_module_laws(w1d);

    WeightModule m = build_irrep(a2, Weight({2, 1}));
    WeightModule bidual = dual_module(dual_module(m));
    CHECK(bidual.highest_weight == m.highest_weight);
    for (const Weight& w : m.distinct_weights())
        CHECK(weight_multiplicity(bidual, w) == weight_multiplicity(m, w));

    check_module_laws(dual_module(build_irrep(rs_of("B2"), Weight({1, 1}))));
}

TEST_CASE("symmetric powers") {
    RootSystem a1 = rs_of("A1");
    WeightModule v2 = build_irrep(a1, Weight({2}));
    WeightModule s1 = symmetric_power_module(v2, 1);
    CHECK(s1.dim() == v2.dim());
    CHECK(s1.E[0] == v2.E[0]);
    CHECK(s1.F[0] == v2.F[0]);

    // Sym^2 V(1) is V(2)
    WeightModule s2 = symmetric_power_module(build_irrep(a1, Weight({1})), 2);
    CHECK(s2.dim() == 3);
    CHECK(oracle::check_commutation(s2));
    for (Weight w : {Weight({2}), Weight({0}), Weight({-2})}) CHECK(weight_multiplicity(s2, w) == 1);

    RootSystem a2 = rs_of("A2");
    WeightModule sym2 = symmetric_power_module(build_irrep(a2, Weight({1, 0})), 2);
    CHECK(sym2.dim() == 6);
    CHECK(oracle::check_commutation(sym2));
    CHECK(oracle::check_weyl_symmetry(sym2));

    CHECK_THROWS_AS(symmetric_power_module(build_irrep(a1, Weight({6})), 3, 50), std::length_error);
    CHECK_THROWS_AS(symmetric_power_module(v2, 0), std::invalid_argument);
}

TEST_CASE("closed-form and generic sl2 constructions intertwine") {
    RootSystem a1 = rs_of("A1");
    for (long n = 0; n <= 6; ++n) {
        WeightModule a = build_sl2(n);
        WeightModule b = build_irrep(a1, Weight({n}));
        for (const Weight& w : a.distinct_weights())
            CHECK(weight_multiplicity(a, w) == weight_multiplicity(b, w));
        oracle::IntertwinerResult res = oracle::solve_intertwiner(a, b);
        CHECK(res.solution_dim == 1);
        CHECK(res.invertible);
    }
}

TEST_CASE("module text export is stable") {
    std::string text = module_to_text(build_sl2(2));
    CHECK(text ==
          "module A1 highest 2 dim 3\n"
          "basis 0 weight 2 label v\n"
          "basis 1 weight 0 label f1.v\n"
          "basis 2 weight -2 label f1f1.v\n"
          "E1[0,1] = 2\n"
          "E1[1,2] = 2\n"
          "F1[1,0] = 1\n"
          "F1[2,1] = 1\n");
    std::string a2 = module_to_text(build_irrep(rs_of("A2"), Weight({1, 0})));
    CHECK(a2 ==
          "module A2 highest 1,0 dim 3\n"
          "basis 0 weight 1,0 label v\n"
          "basis 1 weight -1,1 label f1.v\n"
          "basis 2 weight 0,-1 label f2f1.v\n"
          "E1[0,1] = 1\n"
          "E2[1,2] = 1\n"
          "F1[1,0] = 1\n"
          "F2[2,1] = 1\n");
}
