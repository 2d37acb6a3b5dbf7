#pragma once

#include "equirank/irrep.hpp"
#include "equirank/matrix_space.hpp"

#include <cstdint>
#include <utility>

namespace equirank {

/**
 * Hom(V(mu), V(lambda)) in matrix form: elements are
 * (dim target) x (dim source) matrices, the generators act by commutator,
 * and the matrix unit (a, b) has weight wt_target(a) - wt_source(b).
 */
class HomModule {
public:
    HomModule(WeightModule source, WeightModule target);

    const WeightModule& source() const { return source_; }
    const WeightModule& target() const { return target_; }
    const RootSystem& rs() const { return source_.rs; }

    std::size_t dim() const { return source_.dim() * target_.dim(); }
    Weight unit_weight(std::size_t a, std::size_t b) const {
        return target_.weights[a] - source_.weights[b];
    }
    /// Highest weight occurring: lambda + (-w0 mu).
    Weight top_weight() const;

    Matrix act_e(int i, const Matrix& t) const;  // E_target T - T E_source
    Matrix act_f(int i, const Matrix& t) const;  // F_target T - T F_source

    /// Matrix units (a, b) of weight xi, in (a, b)-lexicographic order.
    std::vector<std::pair<std::size_t, std::size_t>> weight_space(const Weight& xi) const;

    std::map<Weight, std::size_t> weight_multiplicities() const;

private:
    WeightModule source_, target_;
};

/// Tensor product M (x) N as a plain weight module on the pair basis
/// (a, b) ~ a * dim(N) + b, generators acting by the Leibniz rule.
WeightModule tensor_module(const WeightModule& m, const WeightModule& n,
                           std::size_t dim_guard = kDefaultDimGuard);

/// Pairs (a, b) with wt_M(a) + wt_N(b) = gamma.
std::vector<std::pair<std::size_t, std::size_t>> tensor_weight_space(const WeightModule& m,
                                                                     const WeightModule& n,
                                                                     const Weight& gamma);

/// Basis of the joint kernel of all raising operators on one weight space.
struct PrimitiveBasis {
    Weight weight;
    std::vector<RatVec> vectors;   // coordinates on the ambient basis (module ambient)
    std::vector<Matrix> matrices;  // the same vectors in matrix form (Hom ambient)
    std::size_t dimension() const { return std::max(vectors.size(), matrices.size()); }
};

PrimitiveBasis primitive_space(const WeightModule& ambient, const Weight& gamma);
PrimitiveBasis primitive_space(const HomModule& ambient, const Weight& gamma);

struct Summand {
    Weight weight;
    std::size_t multiplicity = 0;
    Int dim;  // of V(weight)
};

struct Decomposition {
    std::vector<Summand> summands;  // dominant weights in decreasing order
    Int total_dim;
};

/// Isotypic decomposition through primitive spaces: the multiplicity of
/// V(gamma) is dim of the primitive space at gamma. Verifies that the
/// dimensions add up.
Decomposition decompose(const WeightModule& ambient);
Decomposition decompose(const HomModule& ambient);

std::string decomposition_to_json(const Decomposition& d);
std::string decomposition_to_csv(const Decomposition& d);

/// The copy of V(nu) inside Hom generated by a primitive matrix w0 of
/// weight nu: basis vector b of V(nu) (an f-monomial word applied to the
/// highest weight vector) is sent to the same word in act_f applied to w0.
/// Verifies primitivity of w0 and the intertwining identities for every
/// basis vector and every simple index; throws std::logic_error otherwise.
LinearMatrixSpace equivariant_map_space(const Weight& nu, const Matrix& w0, const HomModule& hom,
                                        std::size_t dim_guard = kDefaultDimGuard);

/// True iff Sym^r V(nu) has no primitive vector of weight r*nu - alpha_i.
/// Requires r*nu - alpha_i dominant and the symmetric power within guard.
bool sym_primitive_vanishing(const RootSystem& rs, const Weight& nu, unsigned r, int i,
                             std::size_t dim_guard = kDefaultDimGuard);

/// In the dual of V(mu), true iff the raising-closure of the weight spaces
/// at -mu + alpha_i (over all i) is everything above the lowest-weight line.
bool b_generation_check(const RootSystem& rs, const Weight& mu,
                        std::size_t dim_guard = kDefaultDimGuard);

struct PrvCandidate {
    std::vector<int> word;  // Weyl element as a reflection word
    Weight weight;          // dominant representative of mu - w(lambda)
    bool smallest = false;  // w = identity
    bool biggest = false;   // w = longest element
};

/// One extremal-weight candidate per Weyl group element: the dominant
/// representative of mu - w(lambda).
std::vector<PrvCandidate> prv_candidates(const RootSystem& rs, const Weight& lambda,
                                         const Weight& mu, std::size_t max_weyl_order = 120);

}  // namespace equirank
