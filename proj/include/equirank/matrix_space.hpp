#pragma once

#include "equirank/irrep.hpp"

#include <cstdint>

namespace equirank {

/**
 * An equivariant space of matrices: one (dim target) x (dim source) matrix
 * per basis vector of the parameter module V(nu). Elements are evaluated by
 * linear combination.
 */
struct LinearMatrixSpace {
    RootSystem rs;
    Weight nu;
    WeightModule param;          // V(nu)
    std::vector<Matrix> mats;    // A_b, one per basis vector of param

    Matrix evaluate(const RatVec& u) const;
    bool all_zero() const;
};

enum class VerdictKind {
    CertifiedNotConstant,
    ConstantCorankOneCertified,
    ProbablyConstant,
};

const char* verdict_name(VerdictKind k);

struct RankWitness {
    RatVec point;
    std::size_t rank = 0;
};

/// Classification of a space's rank profile. Non-constancy is certified by
/// two witnesses of distinct rank; constancy is certified only through the
/// corank-one criterion. Everything else stays Monte-Carlo.
struct RankVerdict {
    VerdictKind kind = VerdictKind::ProbablyConstant;
    RankWitness min_rank;   // the closed-orbit point
    RankWitness max_rank;   // best sampled point
    unsigned samples = 0;
    std::uint64_t seed = 0;
};

/// Result of the corank-one criterion scan: lambda = nu + mu - alpha_i with
/// mu a positive multiple of both nu and omega_i.
struct TheoremConditions {
    bool holds = false;
    int simple_index = -1;  // i, when holds
    long d = 0;             // mu = d * nu, when holds
};

}  // namespace equirank
