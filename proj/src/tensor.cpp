#include "equirank/tensor.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace equirank {

HomModule::HomModule(WeightModule source, WeightModule target)
    : source_(std::move(source)), target_(std::move(target)) {
    if (source_.rs.spec() != target_.rs.spec())
        throw std::invalid_argument("HomModule: source and target live over different root systems");
}

Weight HomModule::top_weight() const {
    return target_.highest_weight + minus_w0(rs(), source_.highest_weight);
}

Matrix HomModule::act_e(int i, const Matrix& t) const {
    return target_.E[static_cast<std::size_t>(i)] * t - t * source_.E[static_cast<std::size_t>(i)];
}

Matrix HomModule::act_f(int i, const Matrix& t) const {
    return target_.F[static_cast<std::size_t>(i)] * t - t * source_.F[static_cast<std::size_t>(i)];
}

std::vector<std::pair<std::size_t, std::size_t>> HomModule::weight_space(const Weight& xi) const {
    std::vector<std::pair<std::size_t, std::size_t>> units;
    for (std::size_t a = 0; a < target_.dim(); ++a)
        for (std::size_t b = 0; b < source_.dim(); ++b)
            if (target_.weights[a] - source_.weights[b] == xi) units.emplace_back(a, b);
    return units;
}

std::map<Weight, std::size_t> HomModule::weight_multiplicities() const {
    std::map<Weight, std::size_t> mult;
    for (std::size_t a = 0; a < target_.dim(); ++a)
        for (std::size_t b = 0; b < source_.dim(); ++b)
            ++mult[target_.weights[a] - source_.weights[b]];
    return mult;
}

WeightModule tensor_module(const WeightModule& m, const WeightModule& n, std::size_t dim_guard) {
    if (m.rs.spec() != n.rs.spec())
        throw std::invalid_argument("tensor_module: factors live over different root systems");
    const std::size_t dm = m.dim(), dn = n.dim(), d = dm * dn;
    if (d > dim_guard)
        throw std::length_error("tensor_module: dimension " + std::to_string(d) +
                                " exceeds the guard of " + std::to_string(dim_guard));
    const int r = m.rs.rank();
    WeightModule out{m.rs, m.highest_weight + n.highest_weight, {}, {}, {}, {}, {}, {}};
    out.weights.reserve(d);
    for (std::size_t a = 0; a < dm; ++a)
        for (std::size_t b = 0; b < dn; ++b) {
            out.weights.push_back(m.weights[a] + n.weights[b]);
            out.words.emplace_back();
            out.labels.push_back((a < m.labels.size() ? m.labels[a] : std::to_string(a)) + "(x)" +
                                 (b < n.labels.size() ? n.labels[b] : std::to_string(b)));
        }
    out.E.assign(static_cast<std::size_t>(r), Matrix(d, d));
    out.F.assign(static_cast<std::size_t>(r), Matrix(d, d));
    for (int i = 0; i < r; ++i) {
        const Matrix& em = m.E[static_cast<std::size_t>(i)];
        const Matrix& en = n.E[static_cast<std::size_t>(i)];
        const Matrix& fm = m.F[static_cast<std::size_t>(i)];
        const Matrix& fn = n.F[static_cast<std::size_t>(i)];
        for (std::size_t a = 0; a < dm; ++a)
            for (std::size_t b = 0; b < dn; ++b) {
                const std::size_t col = a * dn + b;
                for (std::size_t c = 0; c < dm; ++c) {
                    if (em.at(c, a) != 0) out.E[static_cast<std::size_t>(i)].at(c * dn + b, col) += em.at(c, a);
                    if (fm.at(c, a) != 0) out.F[static_cast<std::size_t>(i)].at(c * dn + b, col) += fm.at(c, a);
                }
                for (std::size_t c = 0; c < dn; ++c) {
                    if (en.at(c, b) != 0) out.E[static_cast<std::size_t>(i)].at(a * dn + c, col) += en.at(c, b);
                    if (fn.at(c, b) != 0) out.F[static_cast<std::size_t>(i)].at(a * dn + c, col) += fn.at(c, b);
                }
            }
    }
    for (std::size_t b = 0; b < d; ++b) out.support[out.weights[b]].push_back(b);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> tensor_weight_space(const WeightModule& m,
                                                                     const WeightModule& n,
                                                                     const Weight& gamma) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < m.dim(); ++a)
        for (std::size_t b = 0; b < n.dim(); ++b)
            if (m.weights[a] + n.weights[b] == gamma) pairs.emplace_back(a, b);
    return pairs;
}

PrimitiveBasis primitive_space(const WeightModule& ambient, const Weight& gamma) {
    PrimitiveBasis out;
    out.weight = gamma;
    const auto& space = ambient.weight_space(gamma);
    if (space.empty()) return out;
    const int r = ambient.rs.rank();

    // Stack the raising maps restricted to the gamma weight space.
    std::vector<std::vector<std::size_t>> targets;
    std::size_t total_rows = 0;
    for (int i = 0; i < r; ++i) {
        targets.push_back(ambient.weight_space(gamma + ambient.rs.simple_root(i)));
        total_rows += targets.back().size();
    }
    Matrix sys(std::max<std::size_t>(total_rows, 1), space.size());
    std::size_t row0 = 0;
    for (int i = 0; i < r; ++i) {
        const auto& tgt = targets[static_cast<std::size_t>(i)];
        for (std::size_t c = 0; c < space.size(); ++c)
            for (std::size_t t = 0; t < tgt.size(); ++t)
                sys.at(row0 + t, c) = ambient.E[static_cast<std::size_t>(i)].at(tgt[t], space[c]);
        row0 += tgt.size();
    }
    for (const RatVec& k : nullspace(sys)) {
        RatVec full(ambient.dim());
        for (std::size_t c = 0; c < space.size(); ++c) full[space[c]] = k[c];
        out.vectors.push_back(std::move(full));
    }
    return out;
}

PrimitiveBasis primitive_space(const HomModule& ambient, const Weight& gamma) {
    PrimitiveBasis out;
    out.weight = gamma;
    const auto units = ambient.weight_space(gamma);
    if (units.empty()) return out;
    const int r = ambient.rs().rank();
    const WeightModule& src = ambient.source();
    const WeightModule& tgt = ambient.target();

    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> raised;
    std::size_t total_rows = 0;
    for (int i = 0; i < r; ++i) {
        raised.push_back(ambient.weight_space(gamma + ambient.rs().simple_root(i)));
        total_rows += raised.back().size();
    }
    Matrix sys(std::max<std::size_t>(total_rows, 1), units.size());
    std::size_t row0 = 0;
    for (int i = 0; i < r; ++i) {
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> pos;
        for (std::size_t t = 0; t < raised[static_cast<std::size_t>(i)].size(); ++t)
            pos[raised[static_cast<std::size_t>(i)][t]] = t;
        for (std::size_t c = 0; c < units.size(); ++c) {
            auto [a, b] = units[c];
            // act_e on a matrix unit: E_t e_ab - e_ab E_s
            for (std::size_t a2 = 0; a2 < tgt.dim(); ++a2) {
                const Rat& q = tgt.E[static_cast<std::size_t>(i)].at(a2, a);
                if (q != 0) sys.at(row0 + pos.at({a2, b}), c) += q;
            }
            for (std::size_t b2 = 0; b2 < src.dim(); ++b2) {
                const Rat& q = src.E[static_cast<std::size_t>(i)].at(b, b2);
                if (q != 0) sys.at(row0 + pos.at({a, b2}), c) -= q;
            }
        }
        row0 += raised[static_cast<std::size_t>(i)].size();
    }
    for (const RatVec& k : nullspace(sys)) {
        Matrix m(tgt.dim(), src.dim());
        for (std::size_t c = 0; c < units.size(); ++c) m.at(units[c].first, units[c].second) = k[c];
        out.matrices.push_back(std::move(m));
    }
    return out;
}

namespace {

const RootSystem& rs_of(const WeightModule& m) { return m.rs; }
const RootSystem& rs_of(const HomModule& m) { return m.rs(); }

template <typename Ambient, typename MultMap>
Decomposition decompose_impl(const Ambient& ambient, const MultMap& mults, Int total) {
    Decomposition d;
    d.total_dim = total;
    Int covered = 0;
    for (auto it = mults.rbegin(); it != mults.rend(); ++it) {
        const Weight& gamma = it->first;
        if (!gamma.is_dominant()) continue;
        std::size_t mult = primitive_space(ambient, gamma).dimension();
        if (mult == 0) continue;
        Summand s;
        s.weight = gamma;
        s.multiplicity = mult;
        s.dim = weyl_dim(rs_of(ambient), gamma);
        covered += s.dim * static_cast<long>(mult);
        d.summands.push_back(std::move(s));
    }
    if (covered != total)
        throw std::logic_error("decompose: isotypic dimensions sum to " + covered.get_str() +
                               ", ambient has dimension " + total.get_str());
    return d;
}

}  // namespace

Decomposition decompose(const WeightModule& ambient) {
    std::map<Weight, std::size_t> mults;
    for (const Weight& w : ambient.weights) ++mults[w];
    return decompose_impl(ambient, mults, Int(static_cast<long>(ambient.dim())));
}

Decomposition decompose(const HomModule& ambient) {
    return decompose_impl(ambient, ambient.weight_multiplicities(),
                          Int(static_cast<long>(ambient.dim())));
}

std::string decomposition_to_json(const Decomposition& d) {
    std::ostringstream os;
    os << "[";
    for (std::size_t s = 0; s < d.summands.size(); ++s) {
        const Summand& x = d.summands[s];
        os << (s ? "," : "") << "{\"weight\":[";
        for (int i = 0; i < x.weight.rank(); ++i) os << (i ? "," : "") << x.weight[i];
        os << "],\"multiplicity\":" << x.multiplicity << ",\"dim\":" << x.dim.get_str() << "}";
    }
    os << "]";
    return os.str();
}

std::string decomposition_to_csv(const Decomposition& d) {
    std::ostringstream os;
    os << "weight,multiplicity,dim\n";
    for (const Summand& x : d.summands)
        os << x.weight.to_string() << "," << x.multiplicity << "," << x.dim.get_str() << "\n";
    return os.str();
}

LinearMatrixSpace equivariant_map_space(const Weight& nu, const Matrix& w0, const HomModule& hom,
                                        std::size_t dim_guard) {
    const RootSystem& rs = hom.rs();
    const int r = rs.rank();
    if (w0.is_zero()) throw std::logic_error("equivariant_map_space: zero seed matrix");
    // w0 must be a weight vector of weight nu and primitive.
    for (std::size_t a = 0; a < hom.target().dim(); ++a)
        for (std::size_t b = 0; b < hom.source().dim(); ++b)
            if (w0.at(a, b) != 0 && hom.unit_weight(a, b) != nu)
                throw std::logic_error("equivariant_map_space: seed matrix is not of weight " +
                                       nu.to_string());
    for (int i = 0; i < r; ++i)
        if (!hom.act_e(i, w0).is_zero())
            throw std::logic_error("equivariant_map_space: seed matrix is not primitive");

    LinearMatrixSpace space{rs, nu, build_irrep(rs, nu, dim_guard), {}};
    const WeightModule& p = space.param;
    space.mats.resize(p.dim());
    space.mats[0] = w0;
    // Basis vector b of V(nu) is f_i applied to the parent encoded in its
    // word; descend in the same order.
    for (std::size_t b = 1; b < p.dim(); ++b) {
        const std::vector<int>& w = p.words[b];
        std::vector<int> parent_word(w.begin() + 1, w.end());
        std::size_t parent = p.dim();
        for (std::size_t c = 0; c < b; ++c)
            if (p.words[c] == parent_word) { parent = c; break; }
        if (parent == p.dim()) throw std::logic_error("equivariant_map_space: parent word missing");
        space.mats[b] = hom.act_f(w.front(), space.mats[parent]);
    }

    // Intertwining identities: acting on A_b matches the module action on b.
    for (std::size_t b = 0; b < p.dim(); ++b) {
        for (int i = 0; i < r; ++i) {
            Matrix lhs_e = hom.act_e(i, space.mats[b]);
            Matrix lhs_f = hom.act_f(i, space.mats[b]);
            Matrix rhs_e(lhs_e.rows(), lhs_e.cols());
            Matrix rhs_f(lhs_f.rows(), lhs_f.cols());
            for (std::size_t c = 0; c < p.dim(); ++c) {
                const Rat& qe = p.E[static_cast<std::size_t>(i)].at(c, b);
                if (qe != 0) rhs_e.add_scaled(qe, space.mats[c]);
                const Rat& qf = p.F[static_cast<std::size_t>(i)].at(c, b);
                if (qf != 0) rhs_f.add_scaled(qf, space.mats[c]);
            }
            if (!(lhs_e == rhs_e) || !(lhs_f == rhs_f))
                throw std::logic_error("equivariant_map_space: intertwining identity failed");
        }
    }
    return space;
}

bool sym_primitive_vanishing(const RootSystem& rs, const Weight& nu, unsigned r, int i,
                             std::size_t dim_guard) {
    if (i < 0 || i >= rs.rank()) throw std::out_of_range("sym_primitive_vanishing: bad index");
    Weight lambda = nu * static_cast<long>(r) - rs.simple_root(i);
    // With <nu, coroot_i> = 0 the target weight space is empty and the
    // answer is vacuously true, dominant or not.
    if (!lambda.is_dominant() && nu[i] != 0)
        throw std::invalid_argument("sym_primitive_vanishing: r*nu - alpha_i is not dominant");
    WeightModule v = build_irrep(rs, nu, dim_guard);
    WeightModule sym = symmetric_power_module(v, r, dim_guard);
    return primitive_space(sym, lambda).dimension() == 0;
}

bool b_generation_check(const RootSystem& rs, const Weight& mu, std::size_t dim_guard) {
    if (!mu.is_dominant()) throw std::invalid_argument("b_generation_check: mu must be dominant");
    WeightModule dual = dual_module(build_irrep(rs, mu, dim_guard));
    const std::size_t d = dual.dim();
    const Weight lowest = -mu;

    // Incremental raising closure of the weight spaces at -mu + alpha_i:
    // keep an echelon basis, enqueue the raising images of every vector
    // that enlarges the span.
    struct EchRow {
        std::size_t pivot;
        RatVec row;
    };
    std::vector<EchRow> ech;
    std::vector<RatVec> queue;
    for (int i = 0; i < rs.rank(); ++i)
        for (std::size_t b : dual.weight_space(lowest + rs.simple_root(i))) {
            RatVec v(d);
            v[b] = 1;
            queue.push_back(std::move(v));
        }
    while (!queue.empty()) {
        RatVec v = std::move(queue.back());
        queue.pop_back();
        for (const EchRow& er : ech) {
            if (v[er.pivot] == 0) continue;
            Rat f = v[er.pivot];
            for (std::size_t c = 0; c < d; ++c)
                if (er.row[c] != 0) v[c] -= f * er.row[c];
        }
        std::size_t piv = d;
        for (std::size_t c = 0; c < d; ++c)
            if (v[c] != 0) { piv = c; break; }
        if (piv == d) continue;
        Rat inv = 1 / v[piv];
        for (std::size_t c = 0; c < d; ++c) v[c] *= inv;
        for (int i = 0; i < rs.rank(); ++i) {
            RatVec ev(d);
            bool nz = false;
            for (std::size_t c = 0; c < d; ++c) {
                if (v[c] == 0) continue;
                for (std::size_t a = 0; a < d; ++a) {
                    const Rat& q = dual.E[static_cast<std::size_t>(i)].at(a, c);
                    if (q != 0) {
                        ev[a] += q * v[c];
                        nz = true;
                    }
                }
            }
            if (nz) queue.push_back(std::move(ev));
        }
        ech.push_back({piv, std::move(v)});
    }
    return ech.size() == d - 1;
}

std::vector<PrvCandidate> prv_candidates(const RootSystem& rs, const Weight& lambda,
                                         const Weight& mu, std::size_t max_weyl_order) {
    if (!lambda.is_dominant() || !mu.is_dominant())
        throw std::invalid_argument("prv_candidates: weights must be dominant");
    std::vector<PrvCandidate> out;
    for (const WeylElement& w : weyl_group_elements(rs, max_weyl_order)) {
        PrvCandidate c;
        c.word = w.word;
        c.weight = dominant_representative(rs, mu - apply_word(rs, w.word, lambda)).weight;
        c.smallest = w.is_identity;
        c.biggest = w.is_longest;
        out.push_back(std::move(c));
    }
    return out;
}

Matrix LinearMatrixSpace::evaluate(const RatVec& u) const {
    if (u.size() != mats.size())
        throw std::invalid_argument("LinearMatrixSpace::evaluate: coefficient count mismatch");
    Matrix out(mats.empty() ? 0 : mats[0].rows(), mats.empty() ? 0 : mats[0].cols());
    for (std::size_t b = 0; b < mats.size(); ++b)
        if (u[b] != 0) out.add_scaled(u[b], mats[b]);
    return out;
}

bool LinearMatrixSpace::all_zero() const {
    for (const Matrix& m : mats)
        if (!m.is_zero()) return false;
    return true;
}

const char* verdict_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::CertifiedNotConstant: return "CertifiedNotConstant";
        case VerdictKind::ConstantCorankOneCertified: return "ConstantCorankOneCertified";
        case VerdictKind::ProbablyConstant: return "ProbablyConstant";
    }
    return "?";
}

}  // namespace equirank
