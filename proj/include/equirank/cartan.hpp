#pragma once

#include "equirank/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace equirank {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', G = 'G' };

/// Simple type and rank, e.g. {A, 2}. G forces rank 2; D needs rank >= 3;
/// B and C need rank >= 2.
struct RootSystemSpec {
    Family family = Family::A;
    int rank = 1;

    /// Parses "A1", "b2", "G2", ... (case-insensitive). Throws
    /// std::invalid_argument on anything inadmissible.
    static RootSystemSpec parse(std::string_view text);

    std::string name() const;
    bool operator==(const RootSystemSpec&) const = default;
};

/// Integral weight in fundamental-weight coordinates:
/// coords[i] = <lambda, coroot alpha_i>.
struct Weight {
    std::vector<long> coords;

    Weight() = default;
    explicit Weight(std::vector<long> c) : coords(std::move(c)) {}
    static Weight zero(int rank) { return Weight(std::vector<long>(rank, 0)); }
    static Weight fundamental(int rank, int i);

    int rank() const { return static_cast<int>(coords.size()); }
    long operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }

    bool is_zero() const;
    bool is_dominant() const;

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    Weight operator*(long c) const;

    bool operator==(const Weight&) const = default;
    auto operator<=>(const Weight&) const = default;

    std::string to_string() const;  // "1,0,-2"
    static Weight parse(std::string_view text, int rank);
};

/// A positive root, kept both in fundamental-weight coordinates and as a
/// non-negative vector of simple-root coefficients.
struct PositiveRoot {
    Weight fundamental;
    std::vector<long> simple_coords;

    long height() const;
};

/// Cartan matrix, positive roots and basic Weyl machinery for one simple
/// type. Immutable after construction; safe to share across threads.
class RootSystem {
public:
    explicit RootSystem(RootSystemSpec spec);

    const RootSystemSpec& spec() const { return spec_; }
    int rank() const { return spec_.rank; }

    /// cartan(i, j) = <alpha_j, coroot alpha_i>; column j is alpha_j in
    /// fundamental-weight coordinates.
    long cartan(int i, int j) const;

    Weight simple_root(int i) const;
    Weight fundamental_weight(int i) const { return Weight::fundamental(rank(), i); }
    Weight rho() const { return Weight(std::vector<long>(rank(), 1)); }

    const std::vector<PositiveRoot>& positive_roots() const { return positive_; }

    /// <w, coroot of alpha> for an arbitrary positive root, via the
    /// symmetrizing lengths d_i.
    long pairing_with_coroot(const Weight& w, const PositiveRoot& alpha) const;

private:
    RootSystemSpec spec_;
    std::vector<std::vector<long>> cartan_;
    std::vector<PositiveRoot> positive_;
    std::vector<Rat> symmetrizer_;  // d_i, proportional to |alpha_i|^2

    void build_cartan();
    void build_symmetrizer();
    void generate_positive_roots();
};

RootSystem build_root_system(RootSystemSpec spec);

/// <lambda, coroot alpha_i>: a coordinate read. Throws std::out_of_range.
long pairing(const Weight& lambda, int i);

struct DominanceResult {
    bool leq = false;
    /// When leq: non-negative integers x with (Cartan matrix) * x = hi - lo.
    std::optional<std::vector<long>> certificate;
};

/// lo <= hi in the dominance order: hi - lo a non-negative integer
/// combination of simple roots.
DominanceResult dominance_leq(const RootSystem& rs, const Weight& lo, const Weight& hi);

/// s_i(lambda) = lambda - <lambda, coroot_i> alpha_i.
Weight simple_reflection(const RootSystem& rs, int i, const Weight& lambda);

std::set<Weight> weyl_orbit(const RootSystem& rs, const Weight& lambda);

struct DominantRep {
    Weight weight;
    std::vector<int> word;  // reflections applied, outermost last
};

/// The dominant element of the Weyl orbit, with the reflections used to
/// reach it.
DominantRep dominant_representative(const RootSystem& rs, Weight lambda);

/// -w0(lambda), i.e. the highest weight of the dual of V(lambda).
Weight minus_w0(const RootSystem& rs, const Weight& lambda);

struct WeylElement {
    std::vector<int> word;  // product of simple reflections, applied right to left
    bool is_identity = false;
    bool is_longest = false;
};

/// Every Weyl group element as a reflection word, enumerated through the
/// orbit of rho. Throws if the group order exceeds max_order.
std::vector<WeylElement> weyl_group_elements(const RootSystem& rs, std::size_t max_order = 120);

Weight apply_word(const RootSystem& rs, const std::vector<int>& word, Weight lambda);

}  // namespace equirank
