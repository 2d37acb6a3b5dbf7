#include "equirank/ranklab.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace equirank {

std::size_t rank_exact(const Matrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    // Clear denominators per row, then run Bareiss: every division below is
    // exact over the integers.
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Int lcm = 1;
        for (std::size_t j = 0; j < cols; ++j) {
            const Int& den = m.at(i, j).get_den();
            Int g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / g * den;
        }
        for (std::size_t j = 0; j < cols; ++j) {
            Rat q = m.at(i, j) * Rat(lcm);
            a[i][j] = q.get_num();
        }
    }
    std::vector<std::size_t> rowp(rows), colp(cols);
    std::iota(rowp.begin(), rowp.end(), 0);
    std::iota(colp.begin(), colp.end(), 0);
    Int prev = 1;
    std::size_t step = 0;
    const std::size_t maxsteps = std::min(rows, cols);
    while (step < maxsteps) {
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = step; i < rows && pi == rows; ++i)
            for (std::size_t j = step; j < cols; ++j)
                if (a[rowp[i]][colp[j]] != 0) { pi = i; pj = j; break; }
        if (pi == rows) break;
        std::swap(rowp[step], rowp[pi]);
        std::swap(colp[step], colp[pj]);
        const Int& piv = a[rowp[step]][colp[step]];
        for (std::size_t i = step + 1; i < rows; ++i) {
            for (std::size_t j = step + 1; j < cols; ++j) {
                Int t = a[rowp[i]][colp[j]] * piv - a[rowp[i]][colp[step]] * a[rowp[step]][colp[j]];
                mpz_divexact(a[rowp[i]][colp[j]].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[rowp[i]][colp[step]] = 0;
        }
        prev = piv;
        ++step;
    }
    return step;
}

std::uint64_t SplitMix64::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long SplitMix64::uniform(long bound) {
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
    return static_cast<long>(next() % span) - bound;
}

std::size_t rank_at_closed_orbit(const LinearMatrixSpace& space) {
    return rank_exact(space.mats[space.param.highest_index()]);
}

std::pair<std::size_t, RatVec> generic_rank_estimate(const LinearMatrixSpace& space,
                                                     const SampleConfig& cfg) {
    if (cfg.samples < 1 || cfg.coeff_bound < 1)
        throw std::invalid_argument("generic_rank_estimate: samples and bound must be >= 1");
    SplitMix64 rng(cfg.seed);
    const std::size_t d = space.mats.size();
    std::size_t best = 0;
    RatVec witness(d);
    for (unsigned s = 0; s < cfg.samples; ++s) {
        RatVec u(d);
        bool nonzero = false;
        do {
            nonzero = false;
            for (std::size_t b = 0; b < d; ++b) {
                u[b] = Rat(rng.uniform(cfg.coeff_bound));
                if (u[b] != 0) nonzero = true;
            }
        } while (!nonzero);
        std::size_t r = rank_exact(space.evaluate(u));
        if (r > best) {
            best = r;
            witness = u;
        }
    }
    return {best, witness};
}

TheoremConditions theorem_conditions(const RootSystem& rs, const Weight& nu, const Weight& mu,
                                     const Weight& lambda) {
    TheoremConditions out;
    if (nu.rank() != rs.rank() || mu.rank() != rs.rank() || lambda.rank() != rs.rank())
        throw std::invalid_argument("theorem_conditions: weight rank mismatch");
    if (!nu.is_dominant() || !mu.is_dominant() || !lambda.is_dominant()) return out;
    // mu = d * nu for a positive integer d
    long d = 0;
    bool proportional = !nu.is_zero();
    for (int t = 0; proportional && t < rs.rank(); ++t) {
        if (nu[t] == 0) {
            if (mu[t] != 0) proportional = false;
            continue;
        }
        if (mu[t] % nu[t] != 0) { proportional = false; break; }
        long ratio = mu[t] / nu[t];
        if (d == 0) d = ratio;
        else if (d != ratio) proportional = false;
    }
    if (!proportional || d < 1) return out;
    for (int i = 0; i < rs.rank(); ++i) {
        if (!(lambda + rs.simple_root(i) == nu + mu)) continue;
        // mu a positive multiple of omega_i
        bool axis = mu[i] >= 1;
        for (int t = 0; axis && t < rs.rank(); ++t)
            if (t != i && mu[t] != 0) axis = false;
        if (!axis) continue;
        out.holds = true;
        out.simple_index = i;
        out.d = d;
        return out;
    }
    return out;
}

RankVerdict verdict(const LinearMatrixSpace& space, std::size_t mu_dim,
                    const TheoremConditions& conditions, const SampleConfig& cfg) {
    if (space.all_zero()) throw std::invalid_argument("verdict: degenerate space, all matrices zero");
    RankVerdict v;
    v.samples = cfg.samples;
    v.seed = cfg.seed;
    std::size_t closed = rank_at_closed_orbit(space);
    RatVec closed_point(space.mats.size());
    closed_point[space.param.highest_index()] = 1;
    auto [generic, witness] = generic_rank_estimate(space, cfg);
    if (generic < closed)
        throw std::logic_error("verdict: sampled rank below the closed-orbit rank");
    v.min_rank = {closed_point, closed};
    v.max_rank = {witness, generic};
    if (closed != generic) {
        v.kind = VerdictKind::CertifiedNotConstant;
    } else if (conditions.holds && closed == mu_dim - 1) {
        v.kind = VerdictKind::ConstantCorankOneCertified;
    } else {
        v.kind = VerdictKind::ProbablyConstant;
    }
    return v;
}

bool PipelineReport::consistent() const {
    if (conditions.holds) {
        if (multiplicity < 1) return false;
        for (const CandidateReport& c : candidates)
            if (c.verdict.kind != VerdictKind::ConstantCorankOneCertified) return false;
        if (sym_vanishing && !*sym_vanishing) return false;
    } else {
        for (const CandidateReport& c : candidates)
            if (c.verdict.kind == VerdictKind::ConstantCorankOneCertified) return false;
    }
    return true;
}

PipelineReport corank1_pipeline(const RootSystem& rs, const Weight& nu, const Weight& mu,
                                const Weight& lambda, const PipelineConfig& cfg) {
    PipelineReport rep;
    rep.nu = nu;
    rep.mu = mu;
    rep.lambda = lambda;
    rep.conditions = theorem_conditions(rs, nu, mu, lambda);

    WeightModule vmu = build_irrep(rs, mu, cfg.dim_guard);
    WeightModule vlam = build_irrep(rs, lambda, cfg.dim_guard);
    rep.mu_dim = vmu.dim();
    rep.lambda_dim = vlam.dim();
    HomModule hom(std::move(vmu), std::move(vlam));

    PrimitiveBasis prim = primitive_space(hom, nu);
    rep.multiplicity = prim.dimension();
    if (rep.multiplicity == 0) return rep;

    std::vector<std::pair<RatVec, Matrix>> candidates;
    for (std::size_t s = 0; s < prim.matrices.size(); ++s) {
        RatVec unit(prim.matrices.size());
        unit[s] = 1;
        candidates.emplace_back(std::move(unit), prim.matrices[s]);
    }
    if (rep.multiplicity > 1) {
        // The choice of inclusion matters above multiplicity one; probe a
        // few random combinations of the primitive basis as well.
        SplitMix64 rng(cfg.sampling.seed ^ 0x5eedULL);
        for (unsigned t = 0; t < cfg.extra_mixed_candidates; ++t) {
            RatVec combo(prim.matrices.size());
            Matrix w0(prim.matrices[0].rows(), prim.matrices[0].cols());
            bool nonzero = false;
            for (std::size_t s = 0; s < prim.matrices.size(); ++s) {
                combo[s] = Rat(rng.uniform(cfg.sampling.coeff_bound));
                if (combo[s] != 0) {
                    w0.add_scaled(combo[s], prim.matrices[s]);
                    nonzero = true;
                }
            }
            if (nonzero && !w0.is_zero()) candidates.emplace_back(std::move(combo), std::move(w0));
        }
    }

    for (auto& [combo, w0] : candidates) {
        LinearMatrixSpace space = equivariant_map_space(nu, w0, hom, cfg.dim_guard);
        CandidateReport cr;
        cr.combination = combo;
        cr.verdict = verdict(space, hom.source().dim(), rep.conditions, cfg.sampling);
        rep.candidates.push_back(std::move(cr));
    }

    if (cfg.check_sym_vanishing && rep.conditions.holds) {
        // The symmetrization obstruction behind the corank-one family:
        // Sym^(d+1) V(nu) has no summand of weight (d+1)nu - alpha_i.
        unsigned r = static_cast<unsigned>(rep.conditions.d) + 1;
        Rat count(1);
        const std::size_t base = weyl_dim(rs, nu).get_ui();
        for (unsigned t = 0; t < r; ++t) count *= frac(static_cast<long>(base + r - 1 - t), static_cast<long>(t + 1));
        if (count <= static_cast<long>(cfg.sym_guard))
            rep.sym_vanishing = sym_primitive_vanishing(rs, nu, r, rep.conditions.simple_index,
                                                        cfg.sym_guard);
    }
    return rep;
}

Sl2SummandMatrices sl2_summand_matrix(long m, long n, long k) {
    if (!(0 <= k && k <= m && m <= n))
        throw std::invalid_argument("sl2_summand_matrix: need 0 <= k <= m <= n");
    Matrix h(static_cast<std::size_t>(m + 1), static_cast<std::size_t>(n + 1));
    Rat binom(1);
    for (long i = 0; i <= m - k; ++i) {
        // entry (-1)^i binom(m-k, i) at row m-i, column n+k-m+i
        h.at(static_cast<std::size_t>(m - i), static_cast<std::size_t>(n + k - m + i)) =
            (i % 2 == 0 ? binom : -binom);
        binom *= frac(m - k - i, i + 1);
    }
    Matrix l(h.rows(), h.cols());
    for (std::size_t r = 0; r < h.rows(); ++r)
        for (std::size_t c = 0; c < h.cols(); ++c)
            l.at(r, c) = h.at(h.rows() - 1 - r, h.cols() - 1 - c);
    return {std::move(h), std::move(l)};
}

Matrix sl2_band_to_hom(const Matrix& display, long m, long n) {
    // Rows r of the display hold the coefficient of the degree-(m-r)
    // monomial basis vector of V(m), columns c likewise for V(n). Rescale
    // monomials to the f-monomial basis (f^j v = m!/(m-j)! x^(m-j) y^j) and
    // trade the first factor for its dual (f^j v -> (-1)^j dual of f^(m-j) v).
    Matrix t(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(m + 1));
    auto fall = [](long total, long j) {  // total!/(total-j)!
        Rat f(1);
        for (long s = 0; s < j; ++s) f *= Rat(total - s);
        return f;
    };
    for (long r = 0; r <= m; ++r)
        for (long c = 0; c <= n; ++c) {
            const Rat& q = display.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
            if (q == 0) continue;
            long j = m - r;  // V(m) f-power
            long a = n - c;  // V(n) f-power
            Rat coef = q / (fall(m, j) * fall(n, a));
            if (j % 2 != 0) coef = -coef;
            t.at(static_cast<std::size_t>(a), static_cast<std::size_t>(m - j)) += coef;
        }
    return t;
}

ScanResult sl2_scan(long max_n, const ScanConfig& cfg) {
    if (max_n < 0) throw std::invalid_argument("sl2_scan: max_n must be >= 0");
    ScanResult out;
    out.seed = cfg.sampling.seed;
    RootSystem a1((RootSystemSpec{Family::A, 1}));
    PipelineConfig pcfg;
    pcfg.sampling = cfg.sampling;
    pcfg.check_sym_vanishing = cfg.check_sym_vanishing;
    for (long n = 0; n <= max_n; ++n) {
        for (long m = 0; m <= n; ++m) {
            for (long k = 0; k <= m; ++k) {
                ScanRow row{m,     n,     k,     n - m + 2 * k, 0, 0, 0, VerdictKind::ProbablyConstant,
                            false, false, {},    {}};
                if (static_cast<std::size_t>((m + 1) * (n + 1)) > cfg.max_hom_dim) {
                    row.skipped = true;
                    out.rows.push_back(row);
                    continue;
                }
                PipelineReport rep = corank1_pipeline(a1, Weight({row.nu}), Weight({m}), Weight({n}), pcfg);
                row.multiplicity = rep.multiplicity;
                if (!rep.candidates.empty()) {
                    const RankVerdict& v = rep.candidates.front().verdict;
                    row.rank_closed_orbit = v.min_rank.rank;
                    row.rank_generic = v.max_rank.rank;
                    row.kind = v.kind;
                    row.min_witness = v.min_rank.point;
                    row.max_witness = v.max_rank.point;
                    std::size_t minside = static_cast<std::size_t>(m + 1);
                    row.flagged = (v.kind != VerdictKind::CertifiedNotConstant) &&
                                  (minside - v.min_rank.rank >= 2);
                }
                if (!rep.consistent())
                    throw std::logic_error("sl2_scan: pipeline inconsistency at m=" + std::to_string(m) +
                                           " n=" + std::to_string(n) + " k=" + std::to_string(k));
                if (row.flagged) ++out.flagged_count;
                out.rows.push_back(std::move(row));
            }
        }
    }
    std::sort(out.rows.begin(), out.rows.end(), [](const ScanRow& a, const ScanRow& b) {
        return std::tuple(a.m, a.n, a.k) < std::tuple(b.m, b.n, b.k);
    });
    return out;
}

std::string scan_to_csv(const ScanResult& r) {
    std::ostringstream os;
    os << "m,n,k,nu,mult,rank_closed_orbit,rank_generic,verdict,seed\n";
    for (const ScanRow& row : r.rows) {
        os << row.m << "," << row.n << "," << row.k << "," << row.nu << "," << row.multiplicity << ",";
        if (row.skipped) os << ",,skipped";
        else os << row.rank_closed_orbit << "," << row.rank_generic << "," << verdict_name(row.kind);
        os << "," << r.seed << "\n";
    }
    return os.str();
}

std::string scan_to_json(const ScanResult& r) {
    std::ostringstream os;
    auto fractions = [](const RatVec& v) {
        std::ostringstream s;
        s << "[";
        for (std::size_t t = 0; t < v.size(); ++t) s << (t ? "," : "") << "\"" << v[t].get_str() << "\"";
        s << "]";
        return s.str();
    };
    os << "{\"seed\":" << r.seed << ",\"flagged\":" << r.flagged_count << ",\"rows\":[";
    for (std::size_t t = 0; t < r.rows.size(); ++t) {
        const ScanRow& row = r.rows[t];
        os << (t ? "," : "") << "{\"m\":" << row.m << ",\"n\":" << row.n << ",\"k\":" << row.k
           << ",\"nu\":" << row.nu << ",\"mult\":" << row.multiplicity;
        if (row.skipped) os << ",\"skipped\":true";
        else
            os << ",\"rank_closed_orbit\":" << row.rank_closed_orbit
               << ",\"rank_generic\":" << row.rank_generic << ",\"verdict\":\""
               << verdict_name(row.kind) << "\",\"min_witness\":" << fractions(row.min_witness)
               << ",\"max_witness\":" << fractions(row.max_witness);
        os << "}";
    }
    os << "]}";
    return os.str();
}

namespace {

void enum_subsets(long n, long k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(static_cast<std::size_t>(k));
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        out.push_back(cur);
        long pos = k - 1;
        while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
        if (pos < 0) break;
        int v = ++cur[static_cast<std::size_t>(pos)];
        for (long t = pos + 1; t < k; ++t) cur[static_cast<std::size_t>(t)] = v + static_cast<int>(t - pos);
    }
}

// sign of the shuffle merging two disjoint sorted subsets, or 0 on overlap
int shuffle_sign(const std::vector<int>& s, const std::vector<int>& t) {
    int inv = 0;
    for (int a : s)
        for (int b : t) {
            if (a == b) return 0;
            if (a > b) ++inv;
        }
    return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

Matrix WedgeSpace::evaluate(const RatVec& u) const {
    if (u.size() != mats.size())
        throw std::invalid_argument("WedgeSpace::evaluate: coefficient count mismatch");
    Matrix out(mats[0].rows(), mats[0].cols());
    for (std::size_t b = 0; b < mats.size(); ++b)
        if (u[b] != 0) out.add_scaled(u[b], mats[b]);
    return out;
}

WedgeSpace wedge_theta(long n, long r, long k) {
    if (r < 1 || k < 1 || r + k >= n)
        throw std::invalid_argument("wedge_theta: need r, k >= 1 and r + k < n");
    WedgeSpace w{n, r, k, {}, {}};
    std::vector<std::vector<int>> rsub, rk_sub;
    enum_subsets(n, k, w.subsets);
    enum_subsets(n, r, rsub);
    enum_subsets(n, r + k, rk_sub);
    std::map<std::vector<int>, std::size_t> pos;
    for (std::size_t t = 0; t < rk_sub.size(); ++t) pos[rk_sub[t]] = t;
    for (const auto& s : w.subsets) {
        Matrix m(rk_sub.size(), rsub.size());
        for (std::size_t c = 0; c < rsub.size(); ++c) {
            int sign = shuffle_sign(s, rsub[c]);
            if (sign == 0) continue;
            std::vector<int> merged = s;
            merged.insert(merged.end(), rsub[c].begin(), rsub[c].end());
            std::sort(merged.begin(), merged.end());
            m.at(pos.at(merged), c) = sign;
        }
        w.mats.push_back(std::move(m));
    }
    return w;
}

std::pair<std::size_t, std::size_t> wedge_kernel_compare(long n, long r, long k) {
    WedgeSpace w = wedge_theta(n, r, k);
    RatVec first(w.mats.size());
    first[0] = 1;  // e_{1..k}
    Matrix e = w.evaluate(first);
    RatVec both = first;
    both[w.mats.size() - 1] = 1;  // + e_{n-k+1..n}
    Matrix sum = w.evaluate(both);
    const std::size_t cols = e.cols();
    std::size_t ker_e = cols - rank_exact(e);
    std::size_t ker_sum = cols - rank_exact(sum);
    return {ker_e, ker_sum};
}

}  // namespace equirank
