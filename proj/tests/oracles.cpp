#include "oracles.hpp"

#include "equirank/matrix.hpp"
#include "equirank/ranklab.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace equirank::oracle {

namespace {

using Word = std::vector<int>;
using VermaVec = std::map<Word, Rat>;  // combination of lowering words applied to the top vector

// e_i applied to a single word, recursively:
// e_i (f_j w) = f_j (e_i w) + [i == j] <lambda - wt(w), coroot_i> w
VermaVec apply_e(const RootSystem& rs, const Weight& lambda, int i, const Word& word) {
    VermaVec out;
    if (word.empty()) return out;
    int j = word.front();
    Word rest(word.begin() + 1, word.end());
    for (const auto& [w, c] : apply_e(rs, lambda, i, rest)) {
        Word fw{j};
        fw.insert(fw.end(), w.begin(), w.end());
        out[fw] += c;
    }
    if (i == j) {
        Weight wt = lambda;
        for (int t : rest) wt = wt - rs.simple_root(t);
        Rat h(wt[i]);
        if (h != 0) out[rest] += h;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

Rat shapovalov_pair(const RootSystem& rs, const Weight& lambda, const Word& u, const Word& w) {
    VermaVec cur{{w, Rat(1)}};
    for (int i : u) {  // transpose of f_{u0} f_{u1} ... applied left to right
        VermaVec next;
        for (const auto& [word, c] : cur)
            for (const auto& [word2, c2] : apply_e(rs, lambda, i, word)) next[word2] += c * c2;
        cur = std::move(next);
    }
    auto it = cur.find(Word{});
    return it == cur.end() ? Rat(0) : it->second;
}

void enumerate_words(const std::vector<long>& counts, Word& cur, std::vector<Word>& out) {
    bool done = true;
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i] > 0) {
            done = false;
            break;
        }
    if (done) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] == 0) continue;
        auto c = counts;
        --c[i];
        cur.push_back(static_cast<int>(i));
        enumerate_words(c, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::optional<std::size_t> shapovalov_multiplicity(const RootSystem& rs, const Weight& lambda,
                                                   const Weight& gamma, std::size_t word_cap) {
    DominanceResult dom = dominance_leq(rs, gamma, lambda);
    if (!dom.leq) return 0;
    // words = permutations of the multiset given by the simple-root
    // coordinates of lambda - gamma
    std::vector<Word> words;
    Word cur;
    enumerate_words(*dom.certificate, cur, words);
    if (words.size() > word_cap) return std::nullopt;
    Matrix gram(words.size(), words.size());
    for (std::size_t a = 0; a < words.size(); ++a)
        for (std::size_t b = 0; b <= a; ++b) {
            Rat v = shapovalov_pair(rs, lambda, words[a], words[b]);
            gram.at(a, b) = v;
            gram.at(b, a) = v;
        }
    return rank_gauss(gram);
}

std::set<Weight> support_oracle(const RootSystem& rs, const Weight& lambda) {
    std::set<Weight> region{lambda};
    std::deque<Weight> todo{lambda};
    while (!todo.empty()) {
        Weight w = std::move(todo.front());
        todo.pop_front();
        for (int i = 0; i < rs.rank(); ++i) {
            Weight child = w - rs.simple_root(i);
            if (region.count(child)) continue;
            if (!dominance_leq(rs, dominant_representative(rs, child).weight, lambda).leq) continue;
            region.insert(child);
            todo.push_back(std::move(child));
        }
    }
    return region;
}

bool check_commutation(const WeightModule& m) {
    const int n = m.rs.rank();
    const std::size_t d = m.dim();
    // raising and lowering move weight spaces the right way
    for (int i = 0; i < n; ++i) {
        Weight alpha = m.rs.simple_root(i);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) {
                if (m.E[static_cast<std::size_t>(i)].at(a, b) != 0 &&
                    m.weights[a] != m.weights[b] + alpha)
                    return false;
                if (m.F[static_cast<std::size_t>(i)].at(a, b) != 0 &&
                    m.weights[a] != m.weights[b] - alpha)
                    return false;
            }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix c = m.E[static_cast<std::size_t>(i)] * m.F[static_cast<std::size_t>(j)] -
                       m.F[static_cast<std::size_t>(j)] * m.E[static_cast<std::size_t>(i)];
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b) {
                    Rat want = (i == j && a == b) ? Rat(m.weights[a][i]) : Rat(0);
                    if (c.at(a, b) != want) return false;
                }
        }
    return true;
}

bool check_weyl_symmetry(const WeightModule& m) {
    for (const auto& [w, idxs] : m.support)
        for (int i = 0; i < m.rs.rank(); ++i)
            if (weight_multiplicity(m, simple_reflection(m.rs, i, w)) != idxs.size()) return false;
    return true;
}

bool check_support_law(const WeightModule& m) {
    std::set<Weight> got;
    for (const auto& [w, _] : m.support) got.insert(w);
    return got == support_oracle(m.rs, m.highest_weight);
}

bool check_root_strings(const WeightModule& m) {
    try {
        for (const auto& [w, _] : m.support)
            for (const PositiveRoot& alpha : m.rs.positive_roots()) root_string(m, w, alpha);
    } catch (const std::logic_error&) {
        return false;
    }
    return true;
}

bool check_cyclicity(const WeightModule& m) {
    const std::size_t d = m.dim();
    std::vector<RatVec> span;
    RatVec top(d);
    top[m.highest_index()] = 1;
    span.push_back(std::move(top));
    std::size_t dim_before = 0;
    while (span.size() != dim_before) {
        dim_before = span.size();
        std::vector<RatVec> next = span;
        for (const RatVec& v : span)
            for (const Matrix& f : m.F) {
                RatVec fv(d);
                bool nz = false;
                for (std::size_t c = 0; c < d; ++c) {
                    if (v[c] == 0) continue;
                    for (std::size_t a = 0; a < d; ++a)
                        if (f.at(a, c) != 0) {
                            fv[a] += f.at(a, c) * v[c];
                            nz = true;
                        }
                }
                if (nz) next.push_back(std::move(fv));
            }
        Matrix mat(next.size(), d);
        for (std::size_t t = 0; t < next.size(); ++t)
            for (std::size_t c = 0; c < d; ++c) mat.at(t, c) = next[t][c];
        Echelon e = rref(std::move(mat));
        span.clear();
        for (std::size_t t = 0; t < e.pivots.size(); ++t) {
            RatVec v(d);
            for (std::size_t c = 0; c < d; ++c) v[c] = e.mat.at(t, c);
            span.push_back(std::move(v));
        }
    }
    return span.size() == d;
}

bool check_dim(const WeightModule& m) {
    return weyl_dim(m.rs, m.highest_weight) == static_cast<long>(m.dim());
}

IntertwinerResult solve_intertwiner(const WeightModule& a, const WeightModule& b) {
    IntertwinerResult out;
    if (a.dim() != b.dim() || a.rs.spec() != b.rs.spec()) return out;
    const std::size_t d = a.dim();
    const int n = a.rs.rank();
    // unknowns T[p][q] flattened; equations T X_a - X_b T = 0 for X = E_i, F_i
    Matrix sys(2 * static_cast<std::size_t>(n) * d * d, d * d);
    std::size_t row = 0;
    for (int i = 0; i < n; ++i)
        for (int which = 0; which < 2; ++which) {
            const Matrix& xa = which ? a.F[static_cast<std::size_t>(i)] : a.E[static_cast<std::size_t>(i)];
            const Matrix& xb = which ? b.F[static_cast<std::size_t>(i)] : b.E[static_cast<std::size_t>(i)];
            for (std::size_t p = 0; p < d; ++p)
                for (std::size_t q = 0; q < d; ++q) {
                    // (T xa)[p][q] - (xb T)[p][q]
                    for (std::size_t t = 0; t < d; ++t) {
                        if (xa.at(t, q) != 0) sys.at(row, p * d + t) += xa.at(t, q);
                        if (xb.at(p, t) != 0) sys.at(row, t * d + q) -= xb.at(p, t);
                    }
                    ++row;
                }
        }
    auto basis = nullspace(sys);
    out.solution_dim = basis.size();
    if (basis.size() == 1) {
        Matrix t(d, d);
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t q = 0; q < d; ++q) t.at(p, q) = basis[0][p * d + q];
        out.invertible = rank_exact(t) == d;
    }
    return out;
}

}  // namespace equirank::oracle
