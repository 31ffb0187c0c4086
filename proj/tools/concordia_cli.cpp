// Command-line front end. Every verb prints deterministic JSON (or CSV for
// the quasiflat lattice) on stdout and encodes its result in the exit code:
//   0 pass / proved, 1 fail / refuted, 2 undecided, 64 usage error,
//   70 internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include <concordia/concordia.hpp>

namespace {

using namespace concordia;

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_undecided = 2;
constexpr int exit_usage = 64;
constexpr int exit_internal = 70;

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::proved: return exit_pass;
        case Verdict::refuted: return exit_fail;
        default: return exit_undecided;
    }
}

SeifertMatrix matrix_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open matrix file: " + path);
    ordered_json j = ordered_json::parse(in);
    const long long size = j.at("size").get<long long>();
    if (size < 0) throw std::domain_error("matrix size must be nonnegative");
    std::vector<Int> entries;
    for (const auto& v : j.at("entries")) entries.emplace_back(v.get<long long>());
    return SeifertMatrix(static_cast<size_t>(size), std::move(entries));
}

// one knot input: either an expression or a matrix file
KnotValue knot_input(const std::string& expr, const std::string& matrix_file) {
    if (!matrix_file.empty()) {
        if (!expr.empty())
            throw std::domain_error("give either a knot expression or --matrix-file, not both");
        return knot_from_matrix(matrix_from_file(matrix_file), matrix_file);
    }
    if (expr.empty()) throw std::domain_error("missing knot expression (or --matrix-file)");
    return knotdsl::eval_string(expr);
}

std::vector<KnotValue> knot_sample(const std::vector<std::string>& given,
                                   const std::vector<std::string>& fallback) {
    std::vector<KnotValue> out;
    for (const auto& e : given.empty() ? fallback : given)
        out.push_back(knotdsl::eval_string(e));
    return out;
}

const std::vector<std::string> generators8 = {"unknot",   "trefoil",  "ltrefoil", "fig8",
                                              "twist(2)", "twist(3)", "twist(4)", "twist(5)"};
const std::vector<std::string> sample6 = {"unknot", "trefoil",  "ltrefoil",
                                          "fig8",   "twist(2)", "twist(3)"};
const std::vector<std::string> sample5 = {"unknot", "trefoil", "ltrefoil", "fig8", "twist(2)"};

struct OperatorFlags {
    long long cable = 0;
    std::string consum;
    bool reverse_op = false;
    bool zero_op = false;
    long long w = 0;
    long long gw = 0;
    std::string pattern;
    CLI::Option* cable_opt = nullptr;
    CLI::Option* consum_opt = nullptr;
    CLI::Option* w_opt = nullptr;
    CLI::Option* gw_opt = nullptr;
    CLI::Option* pattern_opt = nullptr;
};

void add_operator_flags(CLI::App* cmd, OperatorFlags& f) {
    f.cable_opt = cmd->add_option("--cable", f.cable, "cable operator of winding N");
    f.consum_opt =
        cmd->add_option("--consum", f.consum, "connected sum with the given knot expression");
    cmd->add_flag("--reverse-op", f.reverse_op, "string reversal operator");
    cmd->add_flag("--zero-op", f.zero_op, "winding-zero operator with unknot pattern");
    f.w_opt = cmd->add_option("--w", f.w, "algebraic winding of a generic satellite");
    f.gw_opt = cmd->add_option("--gw", f.gw, "geometric winding of a generic satellite");
    f.pattern_opt = cmd->add_option("--pattern", f.pattern, "pattern knot expression");
}

// builds the selected operator; when nothing is selected, returns the
// fallback (empty label means "require an explicit choice")
SatelliteOperator build_operator(const OperatorFlags& f, const char* fallback_pattern,
                                 long long fallback_w, long long fallback_gw) {
    int chosen = 0;
    if (f.cable_opt->count() > 0) ++chosen;
    if (f.consum_opt->count() > 0) ++chosen;
    if (f.reverse_op) ++chosen;
    if (f.zero_op) ++chosen;
    const bool generic =
        f.w_opt->count() > 0 || f.gw_opt->count() > 0 || f.pattern_opt->count() > 0;
    if (generic) ++chosen;
    if (chosen > 1) throw std::domain_error("choose exactly one operator flag");
    if (f.cable_opt->count() > 0) return make_cable_operator(f.cable);
    if (f.consum_opt->count() > 0)
        return make_connected_sum_operator(knotdsl::eval_string(f.consum));
    if (f.reverse_op) return make_reverse_operator();
    if (f.zero_op) return make_zero_operator();
    if (generic) {
        if (f.w_opt->count() == 0 || f.gw_opt->count() == 0 || f.pattern_opt->count() == 0)
            throw std::domain_error("a generic satellite needs --w, --gw, and --pattern");
        KnotValue pat = knotdsl::eval_string(f.pattern);
        std::string label = "sat(" + std::to_string(f.w) + ", " + std::to_string(f.gw) + "; " +
                            pat.label + ")";
        return make_satellite_operator(f.w, f.gw, std::move(pat), std::move(label));
    }
    if (fallback_pattern == nullptr)
        throw std::domain_error("an operator flag is required (--cable, --consum, --reverse-op, "
                                "--zero-op, or --w/--gw/--pattern)");
    KnotValue pat = knotdsl::eval_string(fallback_pattern);
    std::string label = "sat(" + std::to_string(fallback_w) + ", " +
                        std::to_string(fallback_gw) + "; " + pat.label + ")";
    return make_satellite_operator(fallback_w, fallback_gw, std::move(pat), std::move(label));
}

long long search_cap_from_env() {
    const char* s = std::getenv("CONCORDIA_SEARCH_CAP");
    if (s == nullptr || *s == '\0') return 64;
    try {
        size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != std::string(s).size() || v < 1)
            throw std::domain_error("bad value");
        return v;
    } catch (const std::exception&) {
        throw std::domain_error("CONCORDIA_SEARCH_CAP must be a positive integer");
    }
}

int run(int argc, char** argv) {
    CLI::App app{"exact knot concordance calculator"};
    app.require_subcommand(1);

    // sig
    auto* sig = app.add_subcommand("sig", "signature function of a knot");
    std::string sig_expr, sig_matrix;
    sig->add_option("expr", sig_expr, "knot expression");
    sig->add_option("--matrix-file", sig_matrix, "JSON Seifert matrix {\"size\",\"entries\"}");

    // dist
    auto* dist = app.add_subcommand("dist", "distance estimate between two knots");
    std::string dist_a, dist_b, dist_kind = "slice";
    dist->add_option("k", dist_a, "first knot expression")->required();
    dist->add_option("j", dist_b, "second knot expression")->required();
    dist->add_option("--kind", dist_kind, "norm kind: slice or homology");

    // norm
    auto* norm = app.add_subcommand("norm", "norm estimate of a knot");
    std::string norm_expr, norm_matrix, norm_kind = "slice";
    norm->add_option("expr", norm_expr, "knot expression");
    norm->add_option("--matrix-file", norm_matrix, "JSON Seifert matrix {\"size\",\"entries\"}");
    norm->add_option("--kind", norm_kind, "norm kind: slice or homology");

    // defect
    auto* defect = app.add_subcommand("defect", "additive defect of an operator on sample pairs");
    OperatorFlags defect_op;
    add_operator_flags(defect, defect_op);
    std::vector<std::string> defect_knots;
    defect->add_option("--knot", defect_knots, "sample knot expression (repeatable)");

    // verify-quasiflat
    auto* vq = app.add_subcommand("verify-quasiflat", "lattice quasi-flat certificate");
    long long vq_n = 0, vq_radius = 0;
    unsigned vq_jobs = 1;
    std::string vq_format = "json";
    vq->add_option("--n", vq_n, "lattice rank (number of twist generators)")->required();
    vq->add_option("--radius", vq_radius, "sup-norm radius of the checked cube")->required();
    vq->add_option("--jobs", vq_jobs, "worker threads (output is independent of this)");
    vq->add_option("--format", vq_format, "output format: json or csv");

    // separate
    auto* sep = app.add_subcommand("separate", "separation certificate for two cable windings");
    long long sep_m = 0, sep_n = 0;
    std::string sep_E;
    sep->add_option("--m", sep_m, "first winding")->required();
    sep->add_option("--n", sep_n, "second winding")->required();
    sep->add_option("--E", sep_E, "separation margin (rational)")->required();

    // not-mult
    auto* nm = app.add_subcommand("not-mult",
                                  "certificate that the n-cable is not multiplication by m");
    long long nm_m = 0, nm_n = 0;
    std::string nm_E;
    nm->add_option("--m", nm_m, "claimed multiplier")->required();
    nm->add_option("--n", nm_n, "cable winding")->required();
    nm->add_option("--E", nm_E, "defect margin (rational)")->required();

    // verify-wzero
    auto* wz = app.add_subcommand("verify-wzero", "winding-zero boundedness certificate");
    OperatorFlags wz_op;
    add_operator_flags(wz, wz_op);
    std::vector<std::string> wz_knots;
    wz->add_option("--knot", wz_knots, "companion knot expression (repeatable)");

    // verify-bdc
    auto* bd = app.add_subcommand("verify-bdc", "bounded-distance consistency certificate");
    OperatorFlags bd_op;
    add_operator_flags(bd, bd_op);
    std::vector<std::string> bd_knots;
    bd->add_option("--knot", bd_knots, "companion knot expression (repeatable)");

    // check-axioms
    auto* ax = app.add_subcommand("check-axioms", "group-norm axioms on a knot sample");
    std::vector<std::string> ax_knots;
    ax->add_option("--knot", ax_knots, "sample knot expression (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return exit_pass;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (*sig) {
            KnotValue k = knot_input(sig_expr, sig_matrix);
            ordered_json out;
            out["knot"] = k.label;
            out["sigfn"] = sigfn_to_json(k.sigfn);
            out["slice_ub"] = rat_to_string(k.slice_ub);
            print_json(out);
            return exit_pass;
        }
        if (*dist) {
            NormKind kind = norm_kind_from_string(dist_kind);
            KnotValue a = knotdsl::eval_string(dist_a);
            KnotValue b = knotdsl::eval_string(dist_b);
            ordered_json out;
            out["k"] = a.label;
            out["j"] = b.label;
            out["kind"] = dist_kind;
            out["distance"] = norm_estimate_to_json(distance_estimate(a, b, kind));
            print_json(out);
            return exit_pass;
        }
        if (*norm) {
            NormKind kind = norm_kind_from_string(norm_kind);
            KnotValue k = knot_input(norm_expr, norm_matrix);
            ordered_json out;
            out["knot"] = k.label;
            out["kind"] = norm_kind;
            out["norm"] = norm_estimate_to_json(norm_estimate(k, kind));
            print_json(out);
            return exit_pass;
        }
        if (*defect) {
            SatelliteOperator op = build_operator(defect_op, nullptr, 0, 0);
            std::vector<KnotValue> sample = knot_sample(defect_knots, sample6);
            std::vector<std::pair<KnotValue, KnotValue>> pairs;
            for (size_t i = 0; i < sample.size(); ++i)
                for (size_t j = i; j < sample.size(); ++j)
                    pairs.emplace_back(sample[i], sample[j]);
            CheckOutcome out = quasi_homomorphism_check(op, pairs);
            ordered_json j;
            j["check"] = "quasi_homomorphism";
            j["op"] = operator_record(op);
            j["verdict"] = verdict_to_string(out.verdict);
            j["witnesses"] = out.witnesses;
            print_json(j);
            return verdict_exit(out.verdict);
        }
        if (*vq) {
            if (vq_format != "json" && vq_format != "csv")
                throw std::domain_error("unknown format: " + vq_format);
            Certificate c = quasiflat_certificate(vq_n, vq_radius, vq_jobs);
            ordered_json j = certificate_to_json(c);
            if (vq_format == "csv")
                std::cout << quasiflat_csv(j);
            else
                print_json(j);
            return c.pass ? exit_pass : exit_fail;
        }
        if (*sep) {
            Certificate c =
                operator_separation(sep_m, sep_n, rat_from_string(sep_E), search_cap_from_env());
            print_json(certificate_to_json(c));
            return c.pass ? exit_pass : exit_fail;
        }
        if (*nm) {
            Certificate c =
                not_multiplication(nm_m, nm_n, rat_from_string(nm_E), search_cap_from_env());
            print_json(certificate_to_json(c));
            return c.pass ? exit_pass : exit_fail;
        }
        if (*wz) {
            SatelliteOperator op = build_operator(wz_op, "trefoil", 0, 2);
            Certificate c = winding_zero_bounded(op, knot_sample(wz_knots, sample5));
            print_json(certificate_to_json(c));
            return c.pass ? exit_pass : exit_fail;
        }
        if (*bd) {
            SatelliteOperator op = build_operator(bd_op, nullptr, 0, 0);
            Certificate c = bounded_distance_consistency(op, knot_sample(bd_knots, sample6));
            print_json(certificate_to_json(c));
            return c.pass ? exit_pass : exit_fail;
        }
        if (*ax) {
            CheckOutcome out = check_group_norm_axioms(knot_sample(ax_knots, generators8));
            ordered_json j;
            j["check"] = "group_norm_axioms";
            j["verdict"] = verdict_to_string(out.verdict);
            j["witnesses"] = out.witnesses;
            print_json(j);
            return verdict_exit(out.verdict);
        }
        std::cerr << "no subcommand selected\n";
        return exit_usage;
    } catch (const knotdsl::ParseError& e) {
        std::cerr << e.what() << "\n";
        return exit_usage;
    } catch (const ordered_json::exception& e) {
        std::cerr << e.what() << "\n";
        return exit_usage;
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
