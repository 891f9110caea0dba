#ifndef SGT_VERIFY_HPP
#define SGT_VERIFY_HPP

#include <chrono>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "constructions.hpp"
#include "enumerate.hpp"
#include "graph.hpp"
#include "semigroup.hpp"

namespace sgt {

/// One check of the reproduction harness. Provenance says where the
/// expected value comes from: "reported" (stated alongside the result
/// being reproduced), "derived" (computed by an independent route here)
/// or "definition".
struct VerificationEntry {
    std::string id;
    std::string expected;
    std::string actual;
    bool pass = false;
    std::string provenance;
    double ms = 0.0;
    std::string witness;  // witness or counterexample, when applicable
};

struct VerificationReport {
    std::string suite;
    std::vector<VerificationEntry> entries;

    bool overall() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
};

struct VerifyOptions {
    int girth_n_min = 3;
    int girth_n_max = 6;
    int product_n_min = 1;
    int product_n_max = 4;
    int zero_union_k_min = 2;
    int zero_union_k_max = 4;
    int exhaustive_max_order = 4;
    bool allow_order5 = false;
};

namespace detail {

class Harness {
public:
    explicit Harness(VerificationReport& report) : report_(report) {}

    void check(const std::string& id, const std::string& provenance,
               const std::string& expected,
               const std::function<std::pair<std::string, std::string>()>& run) {
        VerificationEntry e;
        e.id = id;
        e.provenance = provenance;
        e.expected = expected;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            auto [actual, witness] = run();
            e.actual = actual;
            e.witness = witness;
            e.pass = actual == expected;
        } catch (const std::exception& ex) {
            e.actual = std::string("error: ") + ex.what();
            e.pass = false;
        }
        e.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                   .count();
        report_.entries.push_back(std::move(e));
    }

private:
    VerificationReport& report_;
};

inline std::string opt_str(const std::optional<int>& v) {
    return v ? std::to_string(*v) : "absent";
}

inline FiniteSemigroup zero_union_alt4_sym3s(int k) {
    std::vector<FiniteSemigroup> parts;
    parts.push_back(alternating_group(4));
    for (int i = 1; i < k; ++i) parts.push_back(symmetric_group(3));
    return zero_union(parts);
}

/// Pair identities satisfied by every Clifford semigroup, checked for
/// all element pairs against its unique-inverse map:
///   xy = yx  iff  x^{-1}y = yx^{-1};  xxy = xyx  implies  xy = yx;
/// plus the unary-operation axioms themselves.
inline bool clifford_identities_hold(const FiniteSemigroup& s, std::string& failure) {
    const UnaryInverseMap inv = inverse_map(s);
    for (element x = 0; x < s.order(); ++x) {
        if (inv(inv(x)) != x || s.at(s.at(x, inv(x)), x) != x ||
            s.at(x, inv(x)) != s.at(inv(x), x)) {
            failure = "unary axioms fail at x=" + std::to_string(x);
            return false;
        }
        for (element y = 0; y < s.order(); ++y) {
            if (inv(s.at(x, y)) != s.at(inv(y), inv(x))) {
                failure = "(xy)^-1 != y^-1 x^-1 at (" + std::to_string(x) + "," +
                          std::to_string(y) + ")";
                return false;
            }
            const element xxi = s.at(x, inv(x)), yyi = s.at(y, inv(y));
            if (s.at(xxi, yyi) != s.at(yyi, xxi)) {
                failure = "idempotent commutation fails at (" + std::to_string(x) + "," +
                          std::to_string(y) + ")";
                return false;
            }
            const bool commute = s.at(x, y) == s.at(y, x);
            const bool inv_commute = s.at(inv(x), y) == s.at(y, inv(x));
            if (commute != inv_commute) {
                failure = "xy=yx iff x^-1 y = y x^-1 fails at (" + std::to_string(x) + "," +
                          std::to_string(y) + ")";
                return false;
            }
            if (s.at(s.at(x, x), y) == s.at(s.at(x, y), x) && !commute) {
                failure = "xxy=xyx => xy=yx fails at (" + std::to_string(x) + "," +
                          std::to_string(y) + ")";
                return false;
            }
        }
    }
    return true;
}

inline void girth_suite(Harness& h, const VerifyOptions& opt) {
    h.check("band4-table", "reported", "match", [] {
        const FiniteSemigroup s = girth4_band();
        const std::vector<element> expected = {0, 1, 0, 0, 0, 1, 1, 1, 0, 1, 2, 2, 0, 1, 3, 3};
        const bool ok = s.table() == expected && is_band(s) && !is_commutative(s);
        return std::pair<std::string, std::string>(ok ? "match" : "mismatch", {});
    });
    h.check("band4-graph", "reported", "vertices=4 edges=4 girth=4", [] {
        const SimpleGraph g = commuting_graph(girth4_band());
        std::ostringstream out;
        out << "vertices=" << g.vertex_count() << " edges=" << g.edge_count()
            << " girth=" << opt_str(girth(g));
        return std::pair<std::string, std::string>(out.str(), {});
    });
    for (int n = opt.girth_n_min; n <= opt.girth_n_max; ++n) {
        h.check("girth-family-n" + std::to_string(n), "reported",
                "girth=" + std::to_string(2 * n) + " cycles=1", [n] {
                    const SimpleGraph g = commuting_graph(girth_2n_family(n));
                    std::ostringstream out;
                    out << "girth=" << opt_str(girth(g)) << " cycles=" << cycle_space_dimension(g);
                    return std::pair<std::string, std::string>(out.str(), {});
                });
    }
    for (int n = 3; n <= 4; ++n) {
        h.check("girth-family-xcheck-n" + std::to_string(n), "derived", "isomorphic", [n] {
            const bool same = girth_2n_family(n).table() == girth_2n_family_from_maps(n).table();
            return std::pair<std::string, std::string>(same ? "isomorphic" : "different", {});
        });
    }
    h.check("sym3-girth", "reported", "absent", [] {
        return std::pair<std::string, std::string>(
            opt_str(girth(commuting_graph(symmetric_group(3)))), {});
    });
    h.check("alt4-girth", "reported", "3", [] {
        return std::pair<std::string, std::string>(
            opt_str(girth(commuting_graph(alternating_group(4)))), {});
    });
}

inline void clique_suite(Harness& h, const VerifyOptions& opt) {
    h.check("sym3-figure", "reported", "vertices=5 edges=1 clique=2", [] {
        const SimpleGraph g = commuting_graph(symmetric_group(3));
        std::ostringstream out;
        out << "vertices=" << g.vertex_count() << " edges=" << g.edge_count()
            << " clique=" << clique_number(g);
        return std::pair<std::string, std::string>(out.str(), {});
    });
    h.check("alt4-figure", "reported", "vertices=11 edges=7 clique=3", [] {
        const SimpleGraph g = commuting_graph(alternating_group(4));
        std::ostringstream out;
        out << "vertices=" << g.vertex_count() << " edges=" << g.edge_count()
            << " clique=" << clique_number(g);
        return std::pair<std::string, std::string>(out.str(), {});
    });
    for (int n = opt.product_n_min; n <= opt.product_n_max; ++n) {
        h.check("product-clique-n" + std::to_string(n), "reported", std::to_string(2 * n), [n] {
            const auto s = direct_product({symmetric_group(3), cyclic_group(n)});
            return std::pair<std::string, std::string>(
                std::to_string(clique_number(commuting_graph(s))), {});
        });
    }
    for (int k = opt.zero_union_k_min; k <= opt.zero_union_k_max; ++k) {
        h.check("zero-union-clique-k" + std::to_string(k), "reported",
                "clifford=yes clique=" + std::to_string(2 * k + 1), [k] {
                    const auto s = zero_union_alt4_sym3s(k);
                    std::ostringstream out;
                    out << "clifford=" << (is_clifford(s) ? "yes" : "no")
                        << " clique=" << clique_number(commuting_graph(s));
                    return std::pair<std::string, std::string>(out.str(), {});
                });
    }
}

inline void chromatic_suite(Harness& h, const VerifyOptions& opt) {
    h.check("sym3-chromatic", "reported", "2", [] {
        return std::pair<std::string, std::string>(
            std::to_string(chromatic_number(commuting_graph(symmetric_group(3)))), {});
    });
    h.check("alt4-chromatic", "reported", "3", [] {
        return std::pair<std::string, std::string>(
            std::to_string(chromatic_number(commuting_graph(alternating_group(4)))), {});
    });
    for (int n = opt.product_n_min; n <= opt.product_n_max; ++n) {
        h.check("product-chromatic-n" + std::to_string(n), "reported", std::to_string(2 * n),
                [n] {
                    const auto s = direct_product({symmetric_group(3), cyclic_group(n)});
                    return std::pair<std::string, std::string>(
                        std::to_string(chromatic_number(commuting_graph(s))), {});
                });
    }
    for (int k = opt.zero_union_k_min; k <= opt.zero_union_k_max; ++k) {
        h.check("zero-union-chromatic-k" + std::to_string(k), "reported",
                std::to_string(2 * k + 1), [k] {
                    const auto s = zero_union_alt4_sym3s(k);
                    return std::pair<std::string, std::string>(
                        std::to_string(chromatic_number(commuting_graph(s))), {});
                });
    }
}

inline void knit_suite(Harness& h, const VerifyOptions&) {
    h.check("knit-in2", "reported", "absent", [] {
        auto kd = knit_degree(symmetric_inverse_monoid(2));
        return std::pair<std::string, std::string>(kd ? std::to_string(kd->first) : "absent", {});
    });
    for (int m = 3; m <= 4; ++m) {
        h.check("knit-in" + std::to_string(m), "reported", "1 (witness valid)", [m] {
            const auto s = symmetric_inverse_monoid(m);
            auto kd = knit_degree(s);
            if (!kd) return std::pair<std::string, std::string>("absent", {});
            const bool valid = check_left_path(s, commuting_graph(s), kd->second);
            std::string witness;
            for (element x : kd->second.vertices) {
                if (!witness.empty()) witness += " - ";
                witness += s.element_name(x);
            }
            return std::pair<std::string, std::string>(
                std::to_string(kd->first) + (valid ? " (witness valid)" : " (witness invalid)"),
                witness);
        });
    }
    h.check("knit-sym3", "reported", "absent", [] {
        auto kd = knit_degree(symmetric_group(3));
        return std::pair<std::string, std::string>(kd ? std::to_string(kd->first) : "absent", {});
    });
    h.check("knit-alt4", "reported", "absent", [] {
        auto kd = knit_degree(alternating_group(4));
        return std::pair<std::string, std::string>(kd ? std::to_string(kd->first) : "absent", {});
    });
}

inline void vagner_suite(Harness& h, const VerifyOptions&) {
    for (int m = 2; m <= 3; ++m) {
        h.check("vp-in" + std::to_string(m), "reported", "embeds", [m] {
            const auto s = symmetric_inverse_monoid(m);
            const auto rho = vagner_preston(s);
            for (const auto& r : rho)
                if (!r.is_injective())
                    return std::pair<std::string, std::string>("image not injective", {});
            for (element x = 0; x < s.order(); ++x)
                for (element y = 0; y < s.order(); ++y)
                    if (rho[x].then(rho[y]) != rho[s.at(x, y)])
                        return std::pair<std::string, std::string>("not a homomorphism", {});
            for (element x = 0; x < s.order(); ++x)
                for (element y = x + 1; y < s.order(); ++y)
                    if (rho[x] == rho[y])
                        return std::pair<std::string, std::string>("not injective", {});
            return std::pair<std::string, std::string>("embeds", {});
        });
    }
}

inline void lemma_suite(Harness& h, const VerifyOptions& opt) {
    h.check("clifford-identities-constructed", "derived", "hold", [] {
        std::vector<FiniteSemigroup> suite;
        suite.push_back(symmetric_group(3));
        suite.push_back(alternating_group(4));
        suite.push_back(cyclic_group(6));
        suite.push_back(zero_union_alt4_sym3s(2));
        suite.push_back(zero_union_alt4_sym3s(3));
        for (const auto& s : suite) {
            std::string failure;
            if (!is_clifford(s))
                return std::pair<std::string, std::string>("suite member not Clifford", s.name());
            if (!clifford_identities_hold(s, failure))
                return std::pair<std::string, std::string>("fail", s.name() + ": " + failure);
        }
        return std::pair<std::string, std::string>("hold", {});
    });
    h.check("clifford-identities-enumerated", "derived", "hold", [&opt] {
        std::string failure;
        std::string where;
        for (int order = 1; order <= std::min(opt.exhaustive_max_order, 4); ++order) {
            EnumerationTask task{order, "clifford", true, false};
            enumerate(task, [&](const FiniteSemigroup& s) {
                std::string f;
                if (where.empty() && !clifford_identities_hold(s, f)) {
                    failure = f;
                    where = "order " + std::to_string(order);
                }
            });
        }
        if (!where.empty())
            return std::pair<std::string, std::string>("fail", where + ": " + failure);
        return std::pair<std::string, std::string>("hold", {});
    });
    h.check("in3-skew-idempotents", "derived", "hold", [] {
        // Every partial injection with dom != im yields two distinct
        // non-central idempotents a a^-1, a^-1 a, neither commuting with a.
        const auto s = symmetric_inverse_monoid(3);
        const UnaryInverseMap inv = inverse_map(s);
        const ElementSet z = center(s);
        for (element a = 0; a < s.order(); ++a) {
            const PartialMap pm = PartialMap::from_literal(s.element_name(a));
            if (pm.domain() == pm.image()) continue;
            const element e1 = s.at(a, inv(a)), e2 = s.at(inv(a), a);
            const bool ok = e1 != e2 && !z.contains(e1) && !z.contains(e2) &&
                            s.at(a, e1) != s.at(e1, a) && s.at(a, e2) != s.at(e2, a);
            if (!ok)
                return std::pair<std::string, std::string>("fail", s.element_name(a));
        }
        return std::pair<std::string, std::string>("hold", {});
    });
}

inline void exhaustive_suite(Harness& h, const VerifyOptions& opt) {
    for (const auto& id : known_theorem_ids()) {
        h.check("exhaustive-" + id, "derived", "0 counterexamples", [&id, &opt] {
            const auto result = exhaustive_check(id, opt.exhaustive_max_order, opt.allow_order5);
            std::ostringstream out;
            out << result.counterexamples.size() << " counterexamples";
            std::string witness = std::to_string(result.instances_checked) + " instances checked";
            if (!result.pass()) {
                witness += "; first counterexample (order " +
                           std::to_string(result.counterexample_orders.front()) + "):";
                for (element v : result.counterexamples.front())
                    witness += " " + std::to_string(v);
            }
            return std::pair<std::string, std::string>(out.str(), witness);
        });
    }
}

}  // namespace detail

inline VerificationReport run_verification(const std::string& suite,
                                           const VerifyOptions& opt = {}) {
    VerificationReport report;
    report.suite = suite;
    detail::Harness h(report);
    const bool all = suite == "all";
    if (all || suite == "girth") detail::girth_suite(h, opt);
    if (all || suite == "clique") detail::clique_suite(h, opt);
    if (all || suite == "chromatic") detail::chromatic_suite(h, opt);
    if (all || suite == "knit") detail::knit_suite(h, opt);
    if (all || suite == "vagner") detail::vagner_suite(h, opt);
    if (all || suite == "lemma") detail::lemma_suite(h, opt);
    if (all || suite == "exhaustive") detail::exhaustive_suite(h, opt);
    if (report.entries.empty() && !all)
        throw std::invalid_argument("unknown suite: " + suite);
    // Deterministic output regardless of how suites are scheduled.
    std::sort(report.entries.begin(), report.entries.end(),
              [](const VerificationEntry& a, const VerificationEntry& b) { return a.id < b.id; });
    return report;
}

inline nlohmann::json report_json(const VerificationReport& r) {
    nlohmann::json j;
    j["suite"] = r.suite;
    j["entries"] = nlohmann::json::array();
    for (const auto& e : r.entries) {
        nlohmann::json je;
        je["id"] = e.id;
        je["expected"] = e.expected;
        je["actual"] = e.actual;
        je["pass"] = e.pass;
        je["provenance"] = e.provenance;
        je["ms"] = e.ms;
        if (!e.witness.empty()) je["witness"] = e.witness;
        j["entries"].push_back(je);
    }
    j["overall"] = r.overall();
    return j;
}

inline void print_report(std::ostream& out, const VerificationReport& r) {
    for (const auto& e : r.entries) {
        out << (e.pass ? "PASS" : "FAIL") << "  " << e.id << "  expected: " << e.expected
            << "  actual: " << e.actual;
        if (!e.witness.empty()) out << "  [" << e.witness << "]";
        out << "  (" << e.ms << " ms)\n";
    }
    out << (r.overall() ? "OVERALL PASS" : "OVERALL FAIL") << "\n";
}

}  // namespace sgt

#endif  // SGT_VERIFY_HPP
