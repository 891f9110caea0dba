// Command-line front end: build the semigroup families, analyze Cayley
// tables, enumerate small semigroups, and run the verification suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sgt/constructions.hpp"
#include "sgt/enumerate.hpp"
#include "sgt/graph.hpp"
#include "sgt/io.hpp"
#include "sgt/semigroup.hpp"
#include "sgt/verify.hpp"

namespace {

sgt::ConstructionLimits limits_from_env() {
    sgt::ConstructionLimits limits;
    if (const char* cap = std::getenv("SGT_SIZE_CAP")) {
        const long value = std::strtol(cap, nullptr, 10);
        if (value > 0) {
            limits.product_order_cap = value;
            auto raise = [value](int& points, long order_of_points(int)) {
                while (order_of_points(points + 1) <= value) ++points;
            };
            raise(limits.max_transformation_points, [](int m) {
                long n = 1;
                for (int i = 0; i < m; ++i) n *= m;
                return n;
            });
            raise(limits.max_partial_injection_points, [](int m) {
                // order of I_m grows faster than 2^m; crude closed bound
                long n = 1;
                for (int i = 1; i <= m; ++i) n *= 3L * i;
                return n;
            });
            raise(limits.max_permutation_points, [](int m) {
                long n = 1;
                for (int i = 2; i <= m; ++i) n *= i;
                return n;
            });
        }
    }
    return limits;
}

int parse_count(const std::string& spec, std::size_t prefix_len, const std::string& what) {
    try {
        return std::stoi(spec.substr(prefix_len));
    } catch (const std::exception&) {
        throw sgt::bad_params("bad " + what + " parameter in '" + spec + "'");
    }
}

sgt::FiniteSemigroup build_part(const std::string& spec, const sgt::ConstructionLimits& limits) {
    if (spec.rfind("tn", 0) == 0)
        return sgt::full_transformation_monoid(parse_count(spec, 2, "tn"), limits);
    if (spec.rfind("in", 0) == 0)
        return sgt::symmetric_inverse_monoid(parse_count(spec, 2, "in"), limits);
    if (spec.rfind("sym", 0) == 0) return sgt::symmetric_group(parse_count(spec, 3, "sym"), limits);
    if (spec.rfind("alt", 0) == 0)
        return sgt::alternating_group(parse_count(spec, 3, "alt"), limits);
    if (spec.rfind("cyc", 0) == 0) return sgt::cyclic_group(parse_count(spec, 3, "cyc"));
    if (spec == "girth4band") return sgt::girth4_band();
    if (spec.rfind("girth2n", 0) == 0) return sgt::girth_2n_family(parse_count(spec, 7, "girth2n"));
    throw sgt::bad_params("unknown family spec '" + spec + "'");
}

sgt::FiniteSemigroup run_build(const std::string& family, const std::vector<std::string>& args,
                               const sgt::ConstructionLimits& limits) {
    if (family == "zerounion" || family == "product") {
        std::vector<sgt::FiniteSemigroup> parts;
        for (const auto& a : args) parts.push_back(build_part(a, limits));
        return family == "zerounion" ? sgt::zero_union(parts) : sgt::direct_product(parts, limits);
    }
    if (family == "rees") {
        if (args.size() < 3) throw sgt::bad_params("rees needs: <group> <I> <Lambda> [entries...]");
        sgt::ReesMatrixData data{build_part(args[0], limits), std::stoi(args[1]),
                                 std::stoi(args[2]), {}};
        const std::size_t cells = static_cast<std::size_t>(data.i_size) * data.lambda_size;
        if (args.size() == 3) {
            const auto e = sgt::identity_of(data.group);
            if (!e) throw sgt::bad_params("group has no identity");
            data.sandwich.assign(cells, *e);
        } else {
            for (std::size_t i = 3; i < args.size(); ++i)
                data.sandwich.push_back(std::stoi(args[i]));
        }
        return sgt::rees_matrix(data);
    }
    std::string spec = family;
    if (!args.empty()) spec += args[0];
    return build_part(spec, limits);
}

struct AnalyzeFlags {
    bool girth = false, clique = false, chromatic = false, diameter = false, knit = false,
         classify = false;
    std::string export_format;
};

void analyze_one(std::ostream& out, const sgt::FiniteSemigroup& s, const AnalyzeFlags& f) {
    std::ostringstream line;
    line << "order=" << s.order();
    if (f.classify) {
        line << " commutative=" << (sgt::is_commutative(s) ? "yes" : "no")
             << " band=" << (sgt::is_band(s) ? "yes" : "no")
             << " group=" << (sgt::is_group(s) ? "yes" : "no")
             << " regular=" << (sgt::is_regular(s) ? "yes" : "no")
             << " inverse=" << (sgt::is_inverse_semigroup(s) ? "yes" : "no")
             << " clifford=" << (sgt::is_clifford(s) ? "yes" : "no")
             << " completely-regular=" << (sgt::is_completely_regular(s) ? "yes" : "no")
             << " completely-simple=" << (sgt::is_completely_simple(s) ? "yes" : "no");
    }
    const bool needs_graph =
        f.girth || f.clique || f.chromatic || f.diameter || f.knit || !f.export_format.empty();
    if (needs_graph && sgt::is_commutative(s)) {
        out << line.str() << " commutative: no commuting graph\n";
        return;
    }
    if (needs_graph) {
        const sgt::SimpleGraph g = sgt::commuting_graph(s);
        if (f.girth) {
            auto v = sgt::girth(g);
            line << " girth=" << (v ? std::to_string(*v) : "absent");
        }
        if (f.clique) line << " clique=" << sgt::clique_number(g);
        if (f.chromatic) line << " chromatic=" << sgt::chromatic_number(g);
        if (f.diameter) {
            auto v = sgt::diameter(g);
            line << " diameter=" << (v ? std::to_string(*v) : "absent");
        }
        if (f.knit) {
            auto kd = sgt::knit_degree(s);
            line << " knit=" << (kd ? std::to_string(kd->first) : "absent");
        }
        if (!f.export_format.empty()) {
            out << sgt::export_graph(g, s, f.export_format);
            return;
        }
    }
    out << line.str() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite semigroups, commuting graphs and exact graph invariants"};
    app.require_subcommand(1);
    const sgt::ConstructionLimits limits = limits_from_env();

    // build
    auto* build = app.add_subcommand("build", "build a semigroup family and write its table");
    std::string build_family, build_out = "-";
    std::vector<std::string> build_args;
    build->add_option("family", build_family, "tn|in|sym|alt|cyc|rees|zerounion|product|girth4band|girth2n")
        ->required();
    build->add_option("params", build_args, "family parameters");
    build->add_option("-o,--out", build_out, "output path ('-' for stdout)");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "compute invariants of tables from a file or stdin");
    std::string analyze_in = "-";
    AnalyzeFlags flags;
    analyze->add_option("input", analyze_in, "sgt-table file ('-' for stdin)");
    analyze->add_flag("--girth", flags.girth);
    analyze->add_flag("--clique", flags.clique);
    analyze->add_flag("--chromatic", flags.chromatic);
    analyze->add_flag("--diameter", flags.diameter);
    analyze->add_flag("--knit", flags.knit);
    analyze->add_flag("--classify", flags.classify);
    analyze->add_option("--export", flags.export_format, "dot|json");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "stream all semigroups of a small order");
    int enum_order = 2;
    std::string enum_class = "any", enum_out = "-";
    bool enum_raw = false, enum_allow5 = false;
    enumerate->add_option("--order", enum_order, "order in [1,5]")->required();
    enumerate->add_option("--class", enum_class,
                          "any|band|inverse|clifford|completely-regular|completely-simple|"
                          "non-commutative (joined with '+')");
    enumerate->add_flag("--raw", enum_raw, "emit every associative table, no dedup");
    enumerate->add_flag("--allow-order5", enum_allow5, "permit the long order-5 run");
    enumerate->add_option("-o,--out", enum_out, "output path ('-' for stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "run the reproduction and theorem suites");
    std::string suite = "all";
    sgt::VerifyOptions vopt;
    bool json_report = false;
    std::string n_range;
    verify->add_option("suite", suite, "all|girth|clique|chromatic|knit|vagner|lemma|exhaustive");
    verify->add_option("--max-order", vopt.exhaustive_max_order, "exhaustive check order bound");
    verify->add_option("--n", n_range, "girth family range, e.g. 3..6");
    verify->add_flag("--json", json_report, "emit a JSON report");
    verify->add_flag("--allow-order5", vopt.allow_order5);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*build) {
            const sgt::FiniteSemigroup s = run_build(build_family, build_args, limits);
            if (build_out == "-") {
                sgt::write_table(std::cout, s);
            } else {
                std::ofstream out(build_out);
                if (!out) throw sgt::bad_params("cannot open " + build_out);
                sgt::write_table(out, s);
                std::ofstream labels(build_out + ".labels");
                for (sgt::element x = 0; x < s.order(); ++x)
                    labels << x << ' ' << s.element_name(x) << '\n';
            }
        } else if (*analyze) {
            std::ifstream file;
            std::istream* in = &std::cin;
            if (analyze_in != "-") {
                file.open(analyze_in);
                if (!file) throw sgt::bad_params("cannot open " + analyze_in);
                in = &file;
            }
            int line_no = 0;
            while (auto s = sgt::read_table(*in, line_no)) analyze_one(std::cout, *s, flags);
        } else if (*enumerate) {
            std::ofstream file;
            std::ostream* out = &std::cout;
            if (enum_out != "-") {
                file.open(enum_out);
                if (!file) throw sgt::bad_params("cannot open " + enum_out);
                out = &file;
            }
            sgt::EnumerationTask task{enum_order, enum_class, !enum_raw, enum_allow5};
            bool first = true;
            sgt::enumerate(task, [&](const sgt::FiniteSemigroup& s) {
                if (!first) *out << '\n';
                first = false;
                sgt::write_table(*out, s);
            });
        } else if (*verify) {
            if (!n_range.empty()) {
                const auto dots = n_range.find("..");
                if (dots == std::string::npos) throw sgt::bad_params("--n expects a..b");
                vopt.girth_n_min = std::stoi(n_range.substr(0, dots));
                vopt.girth_n_max = std::stoi(n_range.substr(dots + 2));
            }
            const sgt::VerificationReport report = sgt::run_verification(suite, vopt);
            if (json_report)
                std::cout << sgt::report_json(report).dump(2) << '\n';
            else
                sgt::print_report(std::cout, report);
            return report.overall() ? 0 : 1;
        }
    } catch (const sgt::parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
