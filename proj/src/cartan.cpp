#include "equirank/cartan.hpp"

#include "equirank/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace equirank {

namespace {

void validate_spec(const RootSystemSpec& spec) {
    if (spec.rank < 1) throw std::invalid_argument("rank must be positive");
    switch (spec.family) {
        case Family::A: break;
        case Family::B:
        case Family::C:
            if (spec.rank < 2) throw std::invalid_argument(spec.name() + ": B/C require rank >= 2");
            break;
        case Family::D:
            if (spec.rank < 3) throw std::invalid_argument(spec.name() + ": D requires rank >= 3");
            break;
        case Family::G:
            if (spec.rank != 2) throw std::invalid_argument(spec.name() + ": G exists only at rank 2");
            break;
    }
}

}  // namespace

RootSystemSpec RootSystemSpec::parse(std::string_view text) {
    if (text.size() < 2) throw std::invalid_argument("root system spec too short: " + std::string(text));
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    int rank = 0;
    auto [p, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), rank);
    if (ec != std::errc{} || p != text.data() + text.size())
        throw std::invalid_argument("bad rank in root system spec: " + std::string(text));
    Family fam;
    switch (f) {
        case 'A': fam = Family::A; break;
        case 'B': fam = Family::B; break;
        case 'C': fam = Family::C; break;
        case 'D': fam = Family::D; break;
        case 'G': fam = Family::G; break;
        default:
            throw std::invalid_argument(std::string("unsupported family '") + f +
                                        "': expected one of A, B, C, D, G");
    }
    RootSystemSpec spec{fam, rank};
    validate_spec(spec);
    return spec;
}

std::string RootSystemSpec::name() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

Weight Weight::fundamental(int rank, int i) {
    Weight w = zero(rank);
    w.coords[static_cast<std::size_t>(i)] = 1;
    return w;
}

bool Weight::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](long c) { return c == 0; });
}

bool Weight::is_dominant() const {
    return std::all_of(coords.begin(), coords.end(), [](long c) { return c >= 0; });
}

Weight Weight::operator+(const Weight& o) const {
    assert(coords.size() == o.coords.size());
    Weight w = *this;
    for (std::size_t t = 0; t < coords.size(); ++t) w.coords[t] += o.coords[t];
    return w;
}

Weight Weight::operator-(const Weight& o) const {
    assert(coords.size() == o.coords.size());
    Weight w = *this;
    for (std::size_t t = 0; t < coords.size(); ++t) w.coords[t] -= o.coords[t];
    return w;
}

Weight Weight::operator-() const {
    Weight w = *this;
    for (long& c : w.coords) c = -c;
    return w;
}

Weight Weight::operator*(long c) const {
    Weight w = *this;
    for (long& x : w.coords) x *= c;
    return w;
}

std::string Weight::to_string() const {
    std::ostringstream os;
    for (std::size_t t = 0; t < coords.size(); ++t) os << (t ? "," : "") << coords[t];
    return os.str();
}

Weight Weight::parse(std::string_view text, int rank) {
    std::vector<long> coords;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        long v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || p != tok.data() + tok.size())
            throw std::invalid_argument("bad weight coordinate: '" + std::string(tok) + "'");
        coords.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (static_cast<int>(coords.size()) != rank)
        throw std::invalid_argument("weight '" + std::string(text) + "' has " +
                                    std::to_string(coords.size()) + " coordinates, expected " +
                                    std::to_string(rank));
    return Weight(std::move(coords));
}

long PositiveRoot::height() const {
    long h = 0;
    for (long c : simple_coords) h += c;
    return h;
}

RootSystem::RootSystem(RootSystemSpec spec) : spec_(spec) {
    validate_spec(spec_);
    build_cartan();
    build_symmetrizer();
    generate_positive_roots();
}

void RootSystem::build_cartan() {
    const int n = spec_.rank;
    cartan_.assign(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
    if (spec_.family == Family::D) {
        for (int i = 0; i + 2 < n; ++i) cartan_[i][i + 1] = cartan_[i + 1][i] = -1;
        cartan_[n - 3][n - 1] = cartan_[n - 1][n - 3] = -1;
    } else {
        for (int i = 0; i + 1 < n; ++i) cartan_[i][i + 1] = cartan_[i + 1][i] = -1;
        // Bourbaki numbering: B has the short root last, C the long root
        // last, G2 has alpha_1 short.
        if (spec_.family == Family::B) cartan_[n - 1][n - 2] = -2;
        if (spec_.family == Family::C) cartan_[n - 2][n - 1] = -2;
        if (spec_.family == Family::G) cartan_[0][1] = -3;
    }
}

void RootSystem::build_symmetrizer() {
    const int n = spec_.rank;
    symmetrizer_.assign(static_cast<std::size_t>(n), Rat(0));
    std::vector<bool> known(static_cast<std::size_t>(n), false);
    symmetrizer_[0] = 1;
    known[0] = true;
    std::deque<int> todo{0};
    while (!todo.empty()) {
        int i = todo.front();
        todo.pop_front();
        for (int j = 0; j < n; ++j) {
            if (j == i || cartan_[i][j] == 0 || known[j]) continue;
            // d_i <alpha_j, coroot_i> = d_j <alpha_i, coroot_j>
            symmetrizer_[j] = symmetrizer_[i] * frac(cartan_[i][j], cartan_[j][i]);
            known[j] = true;
            todo.push_back(j);
        }
    }
}

void RootSystem::generate_positive_roots() {
    const int n = spec_.rank;
    // Closure from the simple roots: beta + alpha_i is a root iff the
    // alpha_i-string through beta does not stop, i.e. p = q - <beta, coroot_i> >= 1.
    std::set<std::vector<long>> roots;
    std::vector<std::vector<long>> level;
    for (int i = 0; i < n; ++i) {
        std::vector<long> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        roots.insert(e);
        level.push_back(std::move(e));
    }
    while (!level.empty()) {
        std::set<std::vector<long>> next;
        for (const auto& x : level) {
            for (int i = 0; i < n; ++i) {
                long hsum = 0;
                for (long c : x) hsum += c;
                if (hsum == 1 && x[static_cast<std::size_t>(i)] == 1) continue;  // 2 alpha_i is never a root
                long q = 0;
                std::vector<long> y = x;
                while (true) {
                    y[static_cast<std::size_t>(i)] -= 1;
                    bool nonneg = std::all_of(y.begin(), y.end(), [](long c) { return c >= 0; });
                    if (nonneg && roots.count(y)) ++q;
                    else break;
                }
                long pair = 0;
                for (int j = 0; j < n; ++j) pair += cartan_[i][j] * x[static_cast<std::size_t>(j)];
                if (q - pair >= 1) {
                    std::vector<long> z = x;
                    z[static_cast<std::size_t>(i)] += 1;
                    if (!roots.count(z)) {
                        roots.insert(z);
                        next.insert(std::move(z));
                    }
                }
            }
        }
        level.assign(next.begin(), next.end());
    }
    positive_.clear();
    for (const auto& x : roots) {
        PositiveRoot r;
        r.simple_coords = x;
        std::vector<long> fw(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) fw[i] += cartan_[i][j] * x[static_cast<std::size_t>(j)];
        r.fundamental = Weight(std::move(fw));
        positive_.push_back(std::move(r));
    }
    std::sort(positive_.begin(), positive_.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
        return std::pair(a.height(), a.simple_coords) < std::pair(b.height(), b.simple_coords);
    });

    // Cross-check against the classical counts.
    const auto nn = static_cast<std::size_t>(n);
    std::size_t expected = 0;
    switch (spec_.family) {
        case Family::A: expected = nn * (nn + 1) / 2; break;
        case Family::B:
        case Family::C: expected = nn * nn; break;
        case Family::D: expected = nn * (nn - 1); break;
        case Family::G: expected = 6; break;
    }
    if (positive_.size() != expected)
        throw std::logic_error(spec_.name() + ": generated " + std::to_string(positive_.size()) +
                               " positive roots, expected " + std::to_string(expected));
}

long RootSystem::cartan(int i, int j) const {
    return cartan_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
}

Weight RootSystem::simple_root(int i) const {
    std::vector<long> c(static_cast<std::size_t>(rank()));
    for (int t = 0; t < rank(); ++t) c[static_cast<std::size_t>(t)] = cartan(t, i);
    return Weight(std::move(c));
}

long RootSystem::pairing_with_coroot(const Weight& w, const PositiveRoot& alpha) const {
    // <w, coroot> = 2 (w, alpha) / (alpha, alpha) with (w, alpha_j) = d_j w_j.
    Rat num = 0, den = 0;
    const int n = rank();
    for (int j = 0; j < n; ++j)
        num += symmetrizer_[static_cast<std::size_t>(j)] *
               Rat(alpha.simple_coords[static_cast<std::size_t>(j)] * w[j]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            den += symmetrizer_[static_cast<std::size_t>(i)] *
                   Rat(alpha.simple_coords[static_cast<std::size_t>(i)] * cartan(i, j) *
                       alpha.simple_coords[static_cast<std::size_t>(j)]);
    Rat v = 2 * num / den;
    if (v.get_den() != 1)
        throw std::logic_error("non-integral coroot pairing");
    return static_cast<long>(v.get_num().get_si());
}

RootSystem build_root_system(RootSystemSpec spec) { return RootSystem(spec); }

long pairing(const Weight& lambda, int i) {
    if (i < 0 || i >= lambda.rank())
        throw std::out_of_range("simple root index " + std::to_string(i) + " out of range");
    return lambda[i];
}

DominanceResult dominance_leq(const RootSystem& rs, const Weight& lo, const Weight& hi) {
    const int n = rs.rank();
    assert(lo.rank() == n && hi.rank() == n);
    Matrix c(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    RatVec rhs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) c.at(i, j) = rs.cartan(i, j);
        rhs[static_cast<std::size_t>(i)] = hi[i] - lo[i];
    }
    auto x = solve_linear(c, rhs);  // Cartan matrices of simple types are invertible
    assert(x.has_value());
    std::vector<long> cert(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Rat& v = (*x)[static_cast<std::size_t>(i)];
        if (v.get_den() != 1 || v < 0) return {false, std::nullopt};
        cert[static_cast<std::size_t>(i)] = static_cast<long>(v.get_num().get_si());
    }
    return {true, cert};
}

Weight simple_reflection(const RootSystem& rs, int i, const Weight& lambda) {
    return lambda - rs.simple_root(i) * pairing(lambda, i);
}

std::set<Weight> weyl_orbit(const RootSystem& rs, const Weight& lambda) {
    std::set<Weight> orbit{lambda};
    std::deque<Weight> todo{lambda};
    while (!todo.empty()) {
        Weight w = std::move(todo.front());
        todo.pop_front();
        for (int i = 0; i < rs.rank(); ++i) {
            Weight s = simple_reflection(rs, i, w);
            if (orbit.insert(s).second) todo.push_back(std::move(s));
        }
    }
    return orbit;
}

DominantRep dominant_representative(const RootSystem& rs, Weight lambda) {
    DominantRep rep;
    // Reflecting at a negative coordinate strictly raises the pairing with
    // the sum of fundamental coweights, so this terminates.
    while (true) {
        int neg = -1;
        for (int i = 0; i < rs.rank(); ++i)
            if (lambda[i] < 0) { neg = i; break; }
        if (neg < 0) break;
        lambda = simple_reflection(rs, neg, lambda);
        rep.word.push_back(neg);
    }
    rep.weight = std::move(lambda);
    return rep;
}

Weight minus_w0(const RootSystem& rs, const Weight& lambda) {
    return dominant_representative(rs, -lambda).weight;
}

std::vector<WeylElement> weyl_group_elements(const RootSystem& rs, std::size_t max_order) {
    const Weight rho = rs.rho();
    std::map<Weight, std::vector<int>> words{{rho, {}}};
    std::deque<Weight> todo{rho};
    while (!todo.empty()) {
        Weight w = std::move(todo.front());
        todo.pop_front();
        for (int i = 0; i < rs.rank(); ++i) {
            Weight s = simple_reflection(rs, i, w);
            if (!words.count(s)) {
                std::vector<int> word{i};
                const auto& prev = words.at(w);
                word.insert(word.end(), prev.begin(), prev.end());
                words.emplace(s, std::move(word));
                todo.push_back(std::move(s));
                if (words.size() > max_order)
                    throw std::length_error("Weyl group larger than the configured bound of " +
                                            std::to_string(max_order));
            }
        }
    }
    std::vector<WeylElement> out;
    out.reserve(words.size());
    for (auto& [image, word] : words) {
        WeylElement e;
        e.is_identity = word.empty();
        e.is_longest = (image == -rho);
        e.word = std::move(word);
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
        return std::pair(a.word.size(), a.word) < std::pair(b.word.size(), b.word);
    });
    return out;
}

Weight apply_word(const RootSystem& rs, const std::vector<int>& word, Weight lambda) {
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        lambda = simple_reflection(rs, *it, lambda);
    return lambda;
}

}  // namespace equirank
