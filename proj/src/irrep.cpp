#include "equirank/irrep.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace equirank {

namespace {

std::string word_label(const std::vector<int>& word) {
    if (word.empty()) return "v";
    std::ostringstream os;
    for (int i : word) os << "f" << (i + 1);
    os << ".v";
    return os.str();
}

void index_support(WeightModule& m) {
    m.support.clear();
    for (std::size_t b = 0; b < m.weights.size(); ++b) m.support[m.weights[b]].push_back(b);
}

}  // namespace

const std::vector<std::size_t>& WeightModule::weight_space(const Weight& gamma) const {
    static const std::vector<std::size_t> kEmpty;
    auto it = support.find(gamma);
    return it == support.end() ? kEmpty : it->second;
}

std::vector<Weight> WeightModule::distinct_weights() const {
    std::vector<Weight> out;
    out.reserve(support.size());
    for (const auto& [w, _] : support) out.push_back(w);
    return out;
}

WeightModule build_sl2(long n) {
    if (n < 0) throw std::invalid_argument("build_sl2: n must be non-negative");
    WeightModule m{RootSystem(RootSystemSpec{Family::A, 1}), Weight({n}), {}, {}, {}, {}, {}, {}};
    const auto d = static_cast<std::size_t>(n + 1);
    m.E.assign(1, Matrix(d, d));
    m.F.assign(1, Matrix(d, d));
    for (long k = 0; k <= n; ++k) {
        m.weights.push_back(Weight({n - 2 * k}));
        m.words.emplace_back(static_cast<std::size_t>(k), 0);
        m.labels.push_back(word_label(m.words.back()));
        if (k >= 1) {
            m.F[0].at(static_cast<std::size_t>(k), static_cast<std::size_t>(k - 1)) = 1;
            m.E[0].at(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(k)) = Rat(k * (n - k + 1));
        }
    }
    index_support(m);
    return m;
}

WeightModule build_irrep(const RootSystem& rs, const Weight& lambda, std::size_t dim_guard) {
    const int n = rs.rank();
    if (lambda.rank() != n)
        throw std::invalid_argument("build_irrep: weight rank does not match the root system");
    if (!lambda.is_dominant())
        throw std::invalid_argument("build_irrep: highest weight must be dominant, got " +
                                    lambda.to_string());
    const Int predicted = weyl_dim(rs, lambda);
    if (predicted > static_cast<long>(dim_guard))
        throw std::length_error("build_irrep: predicted dimension " + predicted.get_str() +
                                " exceeds the guard of " + std::to_string(dim_guard));

    std::vector<Weight> alpha;
    for (int i = 0; i < n; ++i) alpha.push_back(rs.simple_root(i));

    // Per basis vector: weight, word, and the expansions of e_j b and f_i b
    // in the neighbouring weight-space bases (index/coefficient pairs).
    using Expansion = std::vector<std::pair<std::size_t, Rat>>;
    std::vector<Weight> wt_of{lambda};
    std::vector<std::vector<int>> words{{}};
    std::map<Weight, std::vector<std::size_t>> basis_of{{lambda, {0}}};
    std::vector<std::vector<Expansion>> e_exp{std::vector<Expansion>(static_cast<std::size_t>(n))};
    std::vector<std::vector<std::optional<Expansion>>> f_exp{
        std::vector<std::optional<Expansion>>(static_cast<std::size_t>(n))};

    std::vector<Weight> level{lambda};
    while (!level.empty()) {
        std::set<Weight> cand_weights;
        for (const Weight& delta : level)
            for (int i = 0; i < n; ++i) cand_weights.insert(delta - alpha[static_cast<std::size_t>(i)]);

        std::vector<Weight> next_level;
        for (const Weight& gamma : cand_weights) {
            // Candidates f_i b over parents b at gamma + alpha_i, in
            // lexicographic order of the resulting words.
            std::vector<std::pair<int, std::size_t>> cands;
            for (int i = 0; i < n; ++i) {
                auto it = basis_of.find(gamma + alpha[static_cast<std::size_t>(i)]);
                if (it == basis_of.end()) continue;
                for (std::size_t b : it->second) cands.emplace_back(i, b);
            }
            if (cands.empty()) continue;

            // Profile of a candidate: its images under every raising
            // operator, written in the already constructed bases. A vector
            // below the highest weight of an irreducible module vanishes
            // iff its profile does.
            std::vector<std::size_t> offs(static_cast<std::size_t>(n) + 1, 0);
            std::vector<const std::vector<std::size_t>*> targets(static_cast<std::size_t>(n), nullptr);
            for (int j = 0; j < n; ++j) {
                auto it = basis_of.find(gamma + alpha[static_cast<std::size_t>(j)]);
                targets[static_cast<std::size_t>(j)] = it == basis_of.end() ? nullptr : &it->second;
                offs[static_cast<std::size_t>(j) + 1] =
                    offs[static_cast<std::size_t>(j)] + (targets[static_cast<std::size_t>(j)]
                                                             ? targets[static_cast<std::size_t>(j)]->size()
                                                             : 0);
            }
            const std::size_t total = offs[static_cast<std::size_t>(n)];

            Matrix rows(cands.size(), std::max<std::size_t>(total, 1));
            for (std::size_t t = 0; t < cands.size(); ++t) {
                auto [i, b] = cands[t];
                for (int j = 0; j < n; ++j) {
                    if (!targets[static_cast<std::size_t>(j)]) continue;
                    std::map<std::size_t, std::size_t> pos;
                    for (std::size_t p = 0; p < targets[static_cast<std::size_t>(j)]->size(); ++p)
                        pos[(*targets[static_cast<std::size_t>(j)])[p]] = p;
                    // e_j f_i b = f_i (e_j b) + [i == j] <wt(b), coroot_i> b
                    for (const auto& [cidx, coef] : e_exp[b][static_cast<std::size_t>(j)]) {
                        const auto& fx = f_exp[cidx][static_cast<std::size_t>(i)];
                        if (!fx) continue;
                        for (const auto& [didx, dcoef] : *fx)
                            rows.at(t, offs[static_cast<std::size_t>(j)] + pos.at(didx)) += coef * dcoef;
                    }
                    if (i == j) {
                        long pair = wt_of[b][i];
                        if (pair != 0)
                            rows.at(t, offs[static_cast<std::size_t>(j)] + pos.at(b)) += Rat(pair);
                    }
                }
            }

            // Greedy echelon pass in candidate order: independent profiles
            // become the new basis; dependent candidates are expanded over
            // the chosen ones.
            struct EchRow {
                std::size_t pivot;
                RatVec row;    // reduced profile, pivot normalized to 1
                RatVec combo;  // row expressed over chosen candidates
            };
            std::vector<EchRow> ech;
            std::vector<std::size_t> chosen;
            std::vector<RatVec> expansions(cands.size());
            for (std::size_t t = 0; t < cands.size(); ++t) {
                RatVec v(total);
                for (std::size_t c = 0; c < total; ++c) v[c] = rows.at(t, c);
                RatVec combo(chosen.size(), Rat(0));
                for (const EchRow& er : ech) {
                    if (v[er.pivot] == 0) continue;
                    Rat f = v[er.pivot];
                    for (std::size_t c = 0; c < total; ++c)
                        if (er.row[c] != 0) v[c] -= f * er.row[c];
                    for (std::size_t s = 0; s < chosen.size(); ++s)
                        if (er.combo[s] != 0) combo[s] += f * er.combo[s];
                }
                std::size_t nz = total;
                for (std::size_t c = 0; c < total; ++c)
                    if (v[c] != 0) { nz = c; break; }
                if (nz == total) {
                    expansions[t] = std::move(combo);  // dependent: f_i b = sum combo_s * chosen_s
                    continue;
                }
                Rat pv = v[nz];
                EchRow er;
                er.pivot = nz;
                er.row.resize(total);
                for (std::size_t c = 0; c < total; ++c) er.row[c] = v[c] / pv;
                er.combo.resize(chosen.size() + 1, Rat(0));
                for (std::size_t s = 0; s < chosen.size(); ++s) er.combo[s] = -combo[s] / pv;
                er.combo[chosen.size()] = 1 / pv;
                for (EchRow& old : ech) old.combo.resize(chosen.size() + 1, Rat(0));
                for (std::size_t tt = 0; tt < t; ++tt) expansions[tt].resize(chosen.size() + 1, Rat(0));
                ech.push_back(std::move(er));
                chosen.push_back(t);
                RatVec self(chosen.size(), Rat(0));
                self[chosen.size() - 1] = 1;
                expansions[t] = std::move(self);
            }
            for (RatVec& x : expansions) x.resize(chosen.size(), Rat(0));

            if (chosen.empty()) {
                for (auto [i, b] : cands)
                    if (!f_exp[b][static_cast<std::size_t>(i)])
                        f_exp[b][static_cast<std::size_t>(i)] = Expansion{};
                continue;
            }

            if (wt_of.size() + chosen.size() > dim_guard)
                throw std::length_error("build_irrep: dimension guard exceeded during construction");

            std::vector<std::size_t> new_idx;
            for (std::size_t t : chosen) {
                auto [i, b] = cands[t];
                std::size_t gi = wt_of.size();
                wt_of.push_back(gamma);
                std::vector<int> w{i};
                w.insert(w.end(), words[b].begin(), words[b].end());
                words.push_back(std::move(w));
                new_idx.push_back(gi);

                std::vector<Expansion> ee(static_cast<std::size_t>(n));
                for (int j = 0; j < n; ++j) {
                    if (!targets[static_cast<std::size_t>(j)]) continue;
                    for (std::size_t p = 0; p < targets[static_cast<std::size_t>(j)]->size(); ++p) {
                        const Rat& c = rows.at(t, offs[static_cast<std::size_t>(j)] + p);
                        if (c != 0)
                            ee[static_cast<std::size_t>(j)].emplace_back(
                                (*targets[static_cast<std::size_t>(j)])[p], c);
                    }
                }
                e_exp.push_back(std::move(ee));
                f_exp.emplace_back(static_cast<std::size_t>(n));
            }
            basis_of[gamma] = new_idx;

            for (std::size_t t = 0; t < cands.size(); ++t) {
                auto [i, b] = cands[t];
                Expansion exp;
                for (std::size_t s = 0; s < chosen.size(); ++s)
                    if (expansions[t][s] != 0) exp.emplace_back(new_idx[s], expansions[t][s]);
                f_exp[b][static_cast<std::size_t>(i)] = std::move(exp);
            }
            next_level.push_back(gamma);
        }
        level = std::move(next_level);
    }

    const std::size_t dim = wt_of.size();
    if (predicted != static_cast<long>(dim))
        throw std::logic_error("build_irrep: constructed dimension " + std::to_string(dim) +
                               " differs from the dimension formula " + predicted.get_str());
    WeightModule m{rs, lambda, std::move(wt_of), std::move(words), {}, {}, {}, {}};
    m.E.assign(static_cast<std::size_t>(n), Matrix(dim, dim));
    m.F.assign(static_cast<std::size_t>(n), Matrix(dim, dim));
    for (std::size_t b = 0; b < dim; ++b) {
        m.labels.push_back(word_label(m.words[b]));
        for (int i = 0; i < n; ++i) {
            for (const auto& [c, q] : e_exp[b][static_cast<std::size_t>(i)])
                m.E[static_cast<std::size_t>(i)].at(c, b) = q;
            if (f_exp[b][static_cast<std::size_t>(i)])
                for (const auto& [c, q] : *f_exp[b][static_cast<std::size_t>(i)])
                    m.F[static_cast<std::size_t>(i)].at(c, b) = q;
        }
    }
    index_support(m);
    return m;
}

Int weyl_dim(const RootSystem& rs, const Weight& lambda) {
    if (!lambda.is_dominant())
        throw std::invalid_argument("weyl_dim: weight must be dominant");
    const Weight rho = rs.rho();
    Rat v(1);
    for (const PositiveRoot& alpha : rs.positive_roots()) {
        long num = rs.pairing_with_coroot(lambda + rho, alpha);
        long den = rs.pairing_with_coroot(rho, alpha);
        v *= frac(num, den);
    }
    if (v.get_den() != 1) throw std::logic_error("weyl_dim: non-integral product");
    return v.get_num();
}

std::size_t weight_multiplicity(const WeightModule& m, const Weight& gamma) {
    return m.weight_space(gamma).size();
}

RootString root_string(const WeightModule& m, const Weight& gamma, const PositiveRoot& alpha) {
    if (m.weight_space(gamma).empty())
        throw std::invalid_argument("root_string: " + gamma.to_string() + " is not a weight");
    RootString s;
    while (!m.weight_space(gamma + alpha.fundamental * (s.p + 1)).empty()) ++s.p;
    while (!m.weight_space(gamma - alpha.fundamental * (s.q + 1)).empty()) ++s.q;
    // the string is an unbroken interval and its endpoints satisfy
    // <gamma, coroot> = q - p
    for (long t = -s.q; t <= s.p; ++t)
        if (m.weight_space(gamma + alpha.fundamental * t).empty())
            throw std::logic_error("root_string: broken string through " + gamma.to_string());
    if (m.rs.pairing_with_coroot(gamma, alpha) != s.q - s.p)
        throw std::logic_error("root_string: endpoint law violated at " + gamma.to_string());
    return s;
}

WeightModule dual_module(const WeightModule& m) {
    const int n = m.rs.rank();
    const std::size_t d = m.dim();
    // Dual basis, reordered to keep weights descending from the new
    // highest weight.
    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    Weight top = minus_w0(m.rs, m.highest_weight);
    auto cert_height = [&](const Weight& w) {
        auto dom = dominance_leq(m.rs, w, top);
        if (!dom.leq) throw std::logic_error("dual_module: weight outside expected cone");
        long h = 0;
        for (long c : *dom.certificate) h += c;
        return h;
    };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        Weight wa = -m.weights[a], wb = -m.weights[b];
        return std::tuple(cert_height(wa), wa, a) < std::tuple(cert_height(wb), wb, b);
    });

    WeightModule out{m.rs, top, {}, {}, {}, {}, {}, {}};
    out.weights.reserve(d);
    for (std::size_t b : order) out.weights.push_back(-m.weights[b]);
    out.words.assign(d, {});
    for (std::size_t b : order) out.labels.push_back("dual(" + (b < m.labels.size() ? m.labels[b] : std::to_string(b)) + ")");
    out.E.assign(static_cast<std::size_t>(n), Matrix(d, d));
    out.F.assign(static_cast<std::size_t>(n), Matrix(d, d));
    for (int i = 0; i < n; ++i) {
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) {
                // contragredient action in the permuted dual basis:
                // (x.xi)(v) = -xi(x.v), so E' = -E^t and F' = -F^t
                const Rat& ee = m.E[static_cast<std::size_t>(i)].at(order[b], order[a]);
                if (ee != 0) out.E[static_cast<std::size_t>(i)].at(a, b) = -ee;
                const Rat& ff = m.F[static_cast<std::size_t>(i)].at(order[b], order[a]);
                if (ff != 0) out.F[static_cast<std::size_t>(i)].at(a, b) = -ff;
            }
    }
    index_support(out);
    return out;
}

WeightModule symmetric_power_module(const WeightModule& m, unsigned r, std::size_t dim_guard) {
    if (r < 1) throw std::invalid_argument("symmetric_power_module: r must be >= 1");
    const std::size_t d = m.dim();
    // dim Sym^r = binom(d + r - 1, r)
    Rat count(1);
    for (unsigned t = 0; t < r; ++t) count *= frac(static_cast<long>(d + r - 1 - t), static_cast<long>(t + 1));
    if (count > static_cast<long>(dim_guard))
        throw std::length_error("symmetric_power_module: dimension " + count.get_str() +
                                " exceeds the guard of " + std::to_string(dim_guard));

    // Multisets of basis indices, non-decreasing, enumerated lexicographically.
    std::vector<std::vector<std::size_t>> multisets;
    std::vector<std::size_t> cur(r, 0);
    while (true) {
        multisets.push_back(cur);
        int pos = static_cast<int>(r) - 1;
        while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == d - 1) --pos;
        if (pos < 0) break;
        std::size_t v = ++cur[static_cast<std::size_t>(pos)];
        for (std::size_t t = static_cast<std::size_t>(pos) + 1; t < r; ++t) cur[t] = v;
    }

    const int n = m.rs.rank();
    WeightModule out{m.rs, m.highest_weight * static_cast<long>(r), {}, {}, {}, {}, {}, {}};
    std::map<std::vector<std::size_t>, std::size_t> index_of;
    for (const auto& ms : multisets) {
        Weight w = Weight::zero(n);
        std::string label;
        for (std::size_t b : ms) {
            w = w + m.weights[b];
            label += (label.empty() ? "" : "*") + (b < m.labels.size() ? m.labels[b] : std::to_string(b));
        }
        index_of[ms] = out.weights.size();
        out.weights.push_back(std::move(w));
        out.words.emplace_back();
        out.labels.push_back(label);
    }

    const std::size_t sd = multisets.size();
    out.E.assign(static_cast<std::size_t>(n), Matrix(sd, sd));
    out.F.assign(static_cast<std::size_t>(n), Matrix(sd, sd));
    for (std::size_t s = 0; s < sd; ++s) {
        const auto& ms = multisets[s];
        for (int i = 0; i < n; ++i) {
            // Leibniz rule on the monomial basis.
            for (std::size_t pos = 0; pos < r; ++pos) {
                std::size_t b = ms[pos];
                for (std::size_t c = 0; c < d; ++c) {
                    const Rat& eq = m.E[static_cast<std::size_t>(i)].at(c, b);
                    if (eq != 0) {
                        auto t = ms;
                        t[pos] = c;
                        std::sort(t.begin(), t.end());
                        out.E[static_cast<std::size_t>(i)].at(index_of.at(t), s) += eq;
                    }
                    const Rat& fq = m.F[static_cast<std::size_t>(i)].at(c, b);
                    if (fq != 0) {
                        auto t = ms;
                        t[pos] = c;
                        std::sort(t.begin(), t.end());
                        out.F[static_cast<std::size_t>(i)].at(index_of.at(t), s) += fq;
                    }
                }
            }
        }
    }
    index_support(out);
    return out;
}

std::string module_to_text(const WeightModule& m) {
    std::ostringstream os;
    os << "module " << m.rs.spec().name() << " highest " << m.highest_weight.to_string() << " dim "
       << m.dim() << "\n";
    for (std::size_t b = 0; b < m.dim(); ++b)
        os << "basis " << b << " weight " << m.weights[b].to_string() << " label "
           << (b < m.labels.size() ? m.labels[b] : "") << "\n";
    auto dump = [&](const char* name, const std::vector<Matrix>& mats) {
        for (std::size_t i = 0; i < mats.size(); ++i)
            for (std::size_t a = 0; a < mats[i].rows(); ++a)
                for (std::size_t b = 0; b < mats[i].cols(); ++b)
                    if (mats[i].at(a, b) != 0)
                        os << name << (i + 1) << "[" << a << "," << b
                           << "] = " << mats[i].at(a, b).get_str() << "\n";
    };
    dump("E", m.E);
    dump("F", m.F);
    return os.str();
}

}  // namespace equirank
