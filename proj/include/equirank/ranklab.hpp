#pragma once

#include "equirank/matrix_space.hpp"
#include "equirank/tensor.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace equirank {

/// Rank over the rationals by fraction-free Bareiss elimination on
/// arbitrary-precision integers (denominators cleared per row first).
/// Deterministic and bit-exact.
std::size_t rank_exact(const Matrix& m);

/// Deterministic 64-bit generator (splitmix64); identical streams on every
/// platform for a given seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Uniform integer in [-bound, bound].
    long uniform(long bound);

private:
    std::uint64_t state_;
};

struct SampleConfig {
    unsigned samples = 5;
    long coeff_bound = 10;
    std::uint64_t seed = 42;
};

/// Rank of the space evaluated at the highest-weight basis vector of the
/// parameter module. The rank is minimal (corank maximal) there.
std::size_t rank_at_closed_orbit(const LinearMatrixSpace& space);

/// Maximum rank over seeded random nonzero integer points; returns the
/// rank and a witness attaining it.
std::pair<std::size_t, RatVec> generic_rank_estimate(const LinearMatrixSpace& space,
                                                     const SampleConfig& cfg);

/// lambda = nu + mu - alpha_i for some i, with mu a positive integer
/// multiple of nu and of omega_i.
TheoremConditions theorem_conditions(const RootSystem& rs, const Weight& nu, const Weight& mu,
                                     const Weight& lambda);

/// Classify the rank profile. Rules in order: a sampled rank differing from
/// the closed-orbit rank certifies non-constancy; otherwise the corank-one
/// criterion together with common rank = mu_dim - 1 certifies constant
/// corank one; otherwise the profile is only probably constant.
RankVerdict verdict(const LinearMatrixSpace& space, std::size_t mu_dim,
                    const TheoremConditions& conditions, const SampleConfig& cfg);

struct PipelineConfig {
    SampleConfig sampling;
    std::size_t dim_guard = kDefaultDimGuard;
    std::size_t sym_guard = kDefaultDimGuard;
    bool check_sym_vanishing = true;   // exercise the Sym^(d+1) obstruction on criterion cases
    unsigned extra_mixed_candidates = 2;  // random combinations when multiplicity > 1
};

struct CandidateReport {
    RatVec combination;  // of the primitive basis (unit vector for pure candidates)
    RankVerdict verdict;
};

struct PipelineReport {
    Weight nu, mu, lambda;
    TheoremConditions conditions;
    std::size_t multiplicity = 0;
    std::size_t mu_dim = 0, lambda_dim = 0;
    std::vector<CandidateReport> candidates;
    std::optional<bool> sym_vanishing;  // Sym^(d+1) obstruction, when checked

    /// Criterion consistency: conditions => (multiplicity >= 1 and every
    /// candidate certified of constant corank one); a non-constancy
    /// certificate => conditions fail.
    bool consistent() const;
};

/// Builds Hom(V(mu), V(lambda)), locates the copies of V(nu) inside it,
/// and classifies each candidate inclusion.
PipelineReport corank1_pipeline(const RootSystem& rs, const Weight& nu, const Weight& mu,
                                const Weight& lambda, const PipelineConfig& cfg = {});

/// The band matrix of the summand V(n-m+2k) of Hom(V(m), V(n)):
/// (m+1) x (n+1), entries (-1)^i * binom(m-k, i) on the anti-diagonal
/// r + c = n + k, bottom entry normalized to 1. `lowest` is the 180-degree
/// rotation.
struct Sl2SummandMatrices {
    Matrix highest, lowest;
};
Sl2SummandMatrices sl2_summand_matrix(long m, long n, long k);

/// Reinterprets the band matrix as an element of Hom(V(m), V(n)) in the
/// f-monomial bases of build_sl2 (monomial-basis rescale on both factors,
/// then duality on the source). The result is primitive of weight
/// n - m + 2k.
Matrix sl2_band_to_hom(const Matrix& display, long m, long n);

struct ScanConfig {
    SampleConfig sampling;
    std::size_t max_hom_dim = 1000000;  // deterministic work bound per triple
    bool check_sym_vanishing = false;
};

struct ScanRow {
    long m, n, k, nu;
    std::size_t multiplicity;
    std::size_t rank_closed_orbit, rank_generic;
    VerdictKind kind;
    bool flagged;  // consistent with constant corank >= 2
    bool skipped;  // over the work bound
    RatVec min_witness, max_witness;
};

struct ScanResult {
    std::vector<ScanRow> rows;
    std::size_t flagged_count = 0;
    std::uint64_t seed = 0;
};

/// All triples 0 <= k <= m <= n <= maxN through the pipeline; a row is
/// flagged when it is not certified non-constant yet sits at corank >= 2.
ScanResult sl2_scan(long max_n, const ScanConfig& cfg = {});

std::string scan_to_csv(const ScanResult& r);
/// Same fields as the CSV plus the witness points as fraction strings.
std::string scan_to_json(const ScanResult& r);

/// The space of wedge multiplication maps u /\ - : Lambda^r Q^n ->
/// Lambda^(r+k) Q^n, parameterized by the standard basis of Lambda^k Q^n
/// (k-subsets in lexicographic order, shuffle signs).
struct WedgeSpace {
    long n, r, k;
    std::vector<std::vector<int>> subsets;  // basis of Lambda^k
    std::vector<Matrix> mats;
    Matrix evaluate(const RatVec& u) const;
};
WedgeSpace wedge_theta(long n, long r, long k);

/// Kernel dimensions of E = e_{1..k} /\ - and of E + E' with
/// E' = e_{n-k+1..n} /\ -.
std::pair<std::size_t, std::size_t> wedge_kernel_compare(long n, long r, long k);

}  // namespace equirank
