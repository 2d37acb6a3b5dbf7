#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace equirank {

// Exact scalars. All core arithmetic is rational over arbitrary-precision
// integers; no floating point anywhere.
using Rat = mpq_class;
using Int = mpz_class;
using RatVec = std::vector<Rat>;

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

/// num/den as a canonical rational; den may be negative.
inline Rat frac(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}
inline Rat frac(long num, long den) { return frac(Int(num), Int(den)); }

inline bool is_zero(const RatVec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace equirank
