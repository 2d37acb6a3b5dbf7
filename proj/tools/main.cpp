// Command-line front end: reproducible batch commands over the exact
// equivariant rank laboratory. Exit codes: 0 success/consistent, 1 usage
// error, 2 mathematical inconsistency detected.

#include "equirank/ranklab.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace equirank;

namespace {

struct GlobalOpts {
    std::uint64_t seed = 42;
    unsigned samples = 5;
    long bound = 10;
    std::size_t guard = kDefaultDimGuard;
    std::string format = "json";
    std::string out_path;
};

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream f(g.out_path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open " + g.out_path);
        f << text;
    }
}

std::string vec_to_json(const RatVec& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t t = 0; t < v.size(); ++t) os << (t ? "," : "") << "\"" << v[t].get_str() << "\"";
    os << "]";
    return os.str();
}

std::string verdict_to_json(const RankVerdict& v) {
    std::ostringstream os;
    os << "{\"kind\":\"" << verdict_name(v.kind) << "\",\"rank_closed_orbit\":" << v.min_rank.rank
       << ",\"rank_generic\":" << v.max_rank.rank << ",\"min_witness\":" << vec_to_json(v.min_rank.point)
       << ",\"max_witness\":" << vec_to_json(v.max_rank.point) << ",\"samples\":" << v.samples
       << ",\"seed\":" << v.seed << "}";
    return os.str();
}

std::string report_to_json(const PipelineReport& r) {
    std::ostringstream os;
    os << "{\"nu\":[" << r.nu.to_string() << "],\"mu\":[" << r.mu.to_string() << "],\"lambda\":["
       << r.lambda.to_string() << "],\"conditions\":{\"holds\":" << (r.conditions.holds ? "true" : "false");
    if (r.conditions.holds)
        os << ",\"i\":" << r.conditions.simple_index + 1 << ",\"d\":" << r.conditions.d;
    os << "},\"mu_dim\":" << r.mu_dim << ",\"lambda_dim\":" << r.lambda_dim
       << ",\"multiplicity\":" << r.multiplicity << ",\"candidates\":[";
    for (std::size_t t = 0; t < r.candidates.size(); ++t)
        os << (t ? "," : "") << "{\"combination\":" << vec_to_json(r.candidates[t].combination)
           << ",\"verdict\":" << verdict_to_json(r.candidates[t].verdict) << "}";
    os << "]";
    if (r.sym_vanishing) os << ",\"sym_vanishing\":" << (*r.sym_vanishing ? "true" : "false");
    os << ",\"consistent\":" << (r.consistent() ? "true" : "false") << "}";
    return os.str();
}

std::string report_to_csv(const PipelineReport& r) {
    std::ostringstream os;
    os << "nu,mu,lambda,conditions,i,d,mult,candidate,rank_closed_orbit,rank_generic,verdict\n";
    for (std::size_t t = 0; t < r.candidates.size(); ++t) {
        const RankVerdict& v = r.candidates[t].verdict;
        os << "\"" << r.nu.to_string() << "\",\"" << r.mu.to_string() << "\",\"" << r.lambda.to_string()
           << "\"," << (r.conditions.holds ? "holds" : "fails") << ","
           << (r.conditions.holds ? std::to_string(r.conditions.simple_index + 1) : "") << ","
           << (r.conditions.holds ? std::to_string(r.conditions.d) : "") << "," << r.multiplicity << ","
           << t << "," << v.min_rank.rank << "," << v.max_rank.rank << "," << verdict_name(v.kind)
           << "\n";
    }
    if (r.candidates.empty())
        os << "\"" << r.nu.to_string() << "\",\"" << r.mu.to_string() << "\",\"" << r.lambda.to_string()
           << "\"," << (r.conditions.holds ? "holds" : "fails") << ",,," << r.multiplicity << ",,,,\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rank laboratory for equivariant spaces of matrices"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "random seed for sampling")->capture_default_str();
    app.add_option("--samples", g.samples, "sample count for generic rank")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--bound", g.bound, "coefficient bound for samples")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--guard", g.guard, "module dimension guard")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", g.out_path, "write the report to a file");

    std::string type_str, nu_str, mu_str, lambda_str;
    long scan_max = 0, wn = 0, wr = 0, wk = 0;
    long lemma_max_weight = 4, lemma_max_power = 3;

    CLI::App* cmd_decompose =
        app.add_subcommand("decompose", "isotypic decomposition of Hom(V(mu), V(lambda))");
    cmd_decompose->add_option("type", type_str, "root system, e.g. A2")->required();
    cmd_decompose->add_option("mu", mu_str, "source highest weight, comma-separated")->required();
    cmd_decompose->add_option("lambda", lambda_str, "target highest weight")->required();

    CLI::App* cmd_verify =
        app.add_subcommand("verify", "corank-one pipeline for V(nu) in Hom(V(mu), V(lambda))");
    cmd_verify->add_option("type", type_str)->required();
    cmd_verify->add_option("nu", nu_str)->required();
    cmd_verify->add_option("mu", mu_str)->required();
    cmd_verify->add_option("lambda", lambda_str)->required();

    CLI::App* cmd_scan =
        app.add_subcommand("scan-sl2", "classify every summand of Hom(V(m), V(n)) for m <= n <= maxN");
    cmd_scan->add_option("maxN", scan_max)->required()->check(CLI::NonNegativeNumber);

    CLI::App* cmd_wedge = app.add_subcommand("wedge", "kernel comparison for wedge multiplication spaces");
    cmd_wedge->add_option("n", wn)->required();
    cmd_wedge->add_option("r", wr)->required();
    cmd_wedge->add_option("k", wk)->required();

    CLI::App* cmd_lemmas =
        app.add_subcommand("lemmas", "sweep the symmetric-power vanishing and generation checks");
    cmd_lemmas->add_option("type", type_str)->required();
    cmd_lemmas->add_option("--max-weight", lemma_max_weight, "largest weight coordinate swept")
        ->capture_default_str();
    cmd_lemmas->add_option("--max-power", lemma_max_power, "largest symmetric power swept")
        ->capture_default_str();

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage errors are exit 1
    }

    try {
        if (*cmd_decompose) {
            RootSystem rs(RootSystemSpec::parse(type_str));
            Weight mu = Weight::parse(mu_str, rs.rank());
            Weight lambda = Weight::parse(lambda_str, rs.rank());
            HomModule hom(build_irrep(rs, mu, g.guard), build_irrep(rs, lambda, g.guard));
            Decomposition d = decompose(hom);
            emit(g, g.format == "csv" ? decomposition_to_csv(d) : decomposition_to_json(d));
            return 0;
        }
        if (*cmd_verify) {
            RootSystem rs(RootSystemSpec::parse(type_str));
            PipelineConfig cfg;
            cfg.sampling = {g.samples, g.bound, g.seed};
            cfg.dim_guard = g.guard;
            cfg.sym_guard = g.guard;
            PipelineReport rep = corank1_pipeline(rs, Weight::parse(nu_str, rs.rank()),
                                                  Weight::parse(mu_str, rs.rank()),
                                                  Weight::parse(lambda_str, rs.rank()), cfg);
            emit(g, g.format == "csv" ? report_to_csv(rep) : report_to_json(rep));
            return rep.consistent() ? 0 : 2;
        }
        if (*cmd_scan) {
            ScanConfig cfg;
            cfg.sampling = {g.samples, g.bound, g.seed};
            ScanResult r = sl2_scan(scan_max, cfg);
            emit(g, g.format == "csv" ? scan_to_csv(r) : scan_to_json(r));
            return r.flagged_count == 0 ? 0 : 2;
        }
        if (*cmd_wedge) {
            auto [ker_e, ker_sum] = wedge_kernel_compare(wn, wr, wk);
            std::ostringstream os;
            if (g.format == "csv")
                os << "n,r,k,dim_ker_e,dim_ker_sum\n"
                   << wn << "," << wr << "," << wk << "," << ker_e << "," << ker_sum << "\n";
            else
                os << "{\"n\":" << wn << ",\"r\":" << wr << ",\"k\":" << wk
                   << ",\"dim_ker_e\":" << ker_e << ",\"dim_ker_sum\":" << ker_sum << "}";
            emit(g, os.str());
            bool ok = (wk >= 2) ? (ker_e > ker_sum) : (ker_e == ker_sum);
            return ok ? 0 : 2;
        }
        if (*cmd_lemmas) {
            RootSystem rs(RootSystemSpec::parse(type_str));
            const int rank = rs.rank();
            std::size_t sym_checked = 0, gen_checked = 0;
            bool all = true;
            std::ostringstream os;
            // Dominant nu with coordinates up to --max-weight; symmetric
            // powers up to --max-power; only indices with r*nu - alpha_i
            // dominant, everything within the dimension guard.
            std::vector<Weight> grid{Weight::zero(rank)};
            for (int i = 0; i < rank; ++i) {
                std::vector<Weight> next;
                for (const Weight& w : grid)
                    for (long c = 0; c <= lemma_max_weight; ++c) {
                        Weight x = w;
                        x.coords[static_cast<std::size_t>(i)] = c;
                        next.push_back(std::move(x));
                    }
                grid = std::move(next);
            }
            for (const Weight& nu : grid) {
                Int dim = weyl_dim(rs, nu);
                if (dim > static_cast<long>(g.guard)) continue;
                for (long r = 1; r <= lemma_max_power; ++r) {
                    Rat count(1);
                    for (long t = 0; t < r; ++t) count *= frac(dim.get_si() + r - 1 - t, t + 1);
                    if (count > static_cast<long>(g.guard)) continue;
                    for (int i = 0; i < rank; ++i) {
                        Weight lam = nu * r - rs.simple_root(i);
                        if (!lam.is_dominant()) continue;
                        ++sym_checked;
                        if (!sym_primitive_vanishing(rs, nu, static_cast<unsigned>(r), i, g.guard)) {
                            all = false;
                            os << "sym_vanishing FAILED at nu=" << nu.to_string() << " r=" << r
                               << " i=" << i + 1 << "\n";
                        }
                    }
                }
                if (dim <= 200) {
                    ++gen_checked;
                    if (!b_generation_check(rs, nu, g.guard)) {
                        all = false;
                        os << "b_generation FAILED at mu=" << nu.to_string() << "\n";
                    }
                }
            }
            os << "{\"type\":\"" << rs.spec().name() << "\",\"sym_vanishing_checked\":" << sym_checked
               << ",\"b_generation_checked\":" << gen_checked
               << ",\"all_pass\":" << (all ? "true" : "false") << "}";
            emit(g, os.str());
            if (sym_checked == 0 || gen_checked == 0)
                std::cerr << "warning: a sweep had no admissible parameters; its pass is vacuous\n";
            return all ? 0 : 2;
        }
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        // invalid_argument, out_of_range and domain logic all derive from
        // logic_error; inputs that violate preconditions are usage errors,
        // internal law violations are inconsistencies.
        if (dynamic_cast<const std::invalid_argument*>(&e) ||
            dynamic_cast<const std::out_of_range*>(&e)) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
        std::cerr << "inconsistency: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
