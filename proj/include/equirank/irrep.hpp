#pragma once

#include "equirank/cartan.hpp"
#include "equirank/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace equirank {

/**
 * A finite-dimensional weight-graded module with explicit exact-rational
 * matrices for every raising operator e_i and lowering operator f_i.
 *
 * For irreducible modules from build_irrep, basis vector b is the
 * f-monomial words[b] applied to the highest weight vector (empty word =
 * the highest weight vector itself, always index 0). Derived modules
 * (duals, symmetric powers, tensor products) keep the same matrix layout
 * but label their bases differently.
 */
struct WeightModule {
    RootSystem rs;
    Weight highest_weight;
    std::vector<Weight> weights;              // weight of each basis vector
    std::vector<std::vector<int>> words;      // f-monomial labels; may be empty for derived modules
    std::vector<std::string> labels;          // printable basis labels
    std::vector<Matrix> E, F;                 // action of e_i / f_i, one per simple index
    std::map<Weight, std::vector<std::size_t>> support;  // weight -> basis indices

    std::size_t dim() const { return weights.size(); }
    std::size_t highest_index() const { return 0; }

    const std::vector<std::size_t>& weight_space(const Weight& gamma) const;
    std::vector<Weight> distinct_weights() const;
};

/// Default cap on basis size for module constructions.
inline constexpr std::size_t kDefaultDimGuard = 2000;

/// V(n) for sl2 in closed form: v_{n-2k} = f^k v_n, f the shift,
/// e v_{n-2k} = k(n-k+1) v_{n-2k+2}.
WeightModule build_sl2(long n);

/// The irreducible module of dominant highest weight lambda, built by
/// breadth-first descent from the highest weight vector. At each weight the
/// candidate vectors f_i b are classified by exact echelon reduction of
/// their images under all raising operators (injective below the top of an
/// irreducible module), which yields the new basis together with the E and
/// F matrix blocks.
WeightModule build_irrep(const RootSystem& rs, const Weight& lambda,
                         std::size_t dim_guard = kDefaultDimGuard);

/// Dimension of V(lambda) by the product formula over positive roots.
Int weyl_dim(const RootSystem& rs, const Weight& lambda);

std::size_t weight_multiplicity(const WeightModule& m, const Weight& gamma);

struct RootString {
    long p = 0;  // max m with gamma + m alpha a weight
    long q = 0;  // -min m with gamma + m alpha a weight
};

/// The alpha-string through gamma. Verifies that the whole interval
/// [-q, p] consists of weights and that <gamma, coroot> = q - p; throws
/// std::logic_error otherwise and std::invalid_argument if gamma is not a
/// weight.
RootString root_string(const WeightModule& m, const Weight& gamma, const PositiveRoot& alpha);

/// Dual module on the dual basis: E' = -F^t, F' = -E^t, highest weight
/// -w0(highest weight).
WeightModule dual_module(const WeightModule& m);

/// Sym^r of a module on the multiset basis, generators acting by the
/// Leibniz rule. Possibly reducible.
WeightModule symmetric_power_module(const WeightModule& m, unsigned r,
                                    std::size_t dim_guard = kDefaultDimGuard);

/// Deterministic plain-text dump (weights, words, sparse E/F entries as
/// fraction strings) for golden-file regression.
std::string module_to_text(const WeightModule& m);

}  // namespace equirank
