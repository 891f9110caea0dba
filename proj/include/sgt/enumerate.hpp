#ifndef SGT_ENUMERATE_HPP
#define SGT_ENUMERATE_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "semigroup.hpp"

namespace sgt {

struct order_unsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct unknown_theorem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Lexicographically minimal table over all element relabelings.
/// Anti-isomorphic tables are deliberately not identified: left
/// multiplication enters the knit-degree definition asymmetrically.
inline std::vector<element> canonical_table(int n, const std::vector<element>& table) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<element> best = table;
    std::vector<element> relabeled(table.size());
    do {
        for (element a = 0; a < n; ++a)
            for (element b = 0; b < n; ++b)
                relabeled[static_cast<std::size_t>(perm[a]) * n + perm[b]] =
                    perm[table[static_cast<std::size_t>(a) * n + b]];
        if (relabeled < best) best = relabeled;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline bool matches_class_filter(const FiniteSemigroup& s, const std::string& filter) {
    std::size_t pos = 0;
    while (pos <= filter.size()) {
        std::size_t plus = filter.find('+', pos);
        const std::string tok =
            filter.substr(pos, plus == std::string::npos ? plus : plus - pos);
        if (tok == "any" || tok.empty()) {
        } else if (tok == "band") {
            if (!is_band(s)) return false;
        } else if (tok == "inverse") {
            if (!is_inverse_semigroup(s)) return false;
        } else if (tok == "clifford") {
            if (!is_clifford(s)) return false;
        } else if (tok == "completely-regular") {
            if (!is_completely_regular(s)) return false;
        } else if (tok == "completely-simple") {
            if (!is_completely_simple(s)) return false;
        } else if (tok == "non-commutative") {
            if (is_commutative(s)) return false;
        } else {
            throw order_unsupported("unknown class filter: " + tok);
        }
        if (plus == std::string::npos) break;
        pos = plus + 1;
    }
    return true;
}

struct EnumerationTask {
    int order = 2;
    std::string class_filter = "any";
    bool dedup = true;
    bool allow_order5 = false;  // order 5 is a long run; require opt-in
};

namespace detail {

class TableSearch {
public:
    TableSearch(int n, const std::function<void(const FiniteSemigroup&)>& visit, bool dedup,
                const std::string& filter)
        : n_(n), cells_(static_cast<std::size_t>(n) * n, -1), visit_(visit), dedup_(dedup),
          filter_(filter) {}

    long run() {
        fill(0);
        return count_;
    }

private:
    element at(element a, element b) const { return cells_[static_cast<std::size_t>(a) * n_ + b]; }

    // A fully decided triple (x, y, z) must satisfy (xy)z = x(yz);
    // returns false as soon as one fails.
    bool triple_ok(element x, element y, element z) const {
        const element xy = at(x, y);
        const element yz = at(y, z);
        if (xy < 0 || yz < 0) return true;
        const element left = at(xy, z);
        const element right = at(x, yz);
        return left < 0 || right < 0 || left == right;
    }

    // Only triples touching the just-assigned cell (a, b) can newly fail:
    // those using it as xy, yz, (xy)z or x(yz).
    bool consistent_after(element a, element b) const {
        for (element z = 0; z < n_; ++z)
            if (!triple_ok(a, b, z)) return false;
        for (element x = 0; x < n_; ++x)
            if (!triple_ok(x, a, b)) return false;
        for (element x = 0; x < n_; ++x)
            for (element y = 0; y < n_; ++y) {
                if (at(x, y) == a && !triple_ok(x, y, b)) return false;
                if (at(x, y) == b && !triple_ok(a, x, y)) return false;
            }
        return true;
    }

    void fill(std::size_t cell) {
        if (cell == cells_.size()) {
            if (dedup_ && canonical_table(n_, cells_) != cells_) return;
            FiniteSemigroup s(n_, cells_);
            if (!matches_class_filter(s, filter_)) return;
            ++count_;
            visit_(s);
            return;
        }
        const element a = static_cast<element>(cell) / n_;
        const element b = static_cast<element>(cell) % n_;
        for (element v = 0; v < n_; ++v) {
            cells_[cell] = v;
            if (consistent_after(a, b)) fill(cell + 1);
        }
        cells_[cell] = -1;
    }

    int n_;
    std::vector<element> cells_;
    const std::function<void(const FiniteSemigroup&)>& visit_;
    bool dedup_;
    std::string filter_;
    long count_ = 0;
};

}  // namespace detail

/// Visits every associative table of the given order, one representative
/// per isomorphism class when dedup is on (the canonical table itself).
/// Returns the number of semigroups visited after class filtering.
inline long enumerate(const EnumerationTask& task,
                      const std::function<void(const FiniteSemigroup&)>& visit) {
    if (task.order < 1 || task.order > 5)
        throw order_unsupported("supported orders are 1..5");
    if (task.order == 5 && !task.allow_order5)
        throw order_unsupported("order 5 is gated behind the long-run flag");
    return detail::TableSearch(task.order, visit, task.dedup, task.class_filter).run();
}

/// Result of an exhaustive theorem check over all small semigroups.
struct TheoremCheckResult {
    std::string theorem;
    long instances_checked = 0;  // semigroups in the relevant class
    std::vector<std::vector<element>> counterexamples;  // offending tables
    std::vector<int> counterexample_orders;

    bool pass() const { return counterexamples.empty(); }
};

inline TheoremCheckResult exhaustive_check(const std::string& theorem, int max_order,
                                           bool allow_order5 = false) {
    std::string filter;
    std::function<bool(const FiniteSemigroup&)> holds;
    if (theorem == "inverse-girth-3") {
        filter = "inverse+non-commutative";
        holds = [](const FiniteSemigroup& s) {
            auto g = girth(commuting_graph(s));
            return !g || *g == 3;
        };
    } else if (theorem == "inverse-clique-ge-2") {
        filter = "inverse+non-commutative";
        holds = [](const FiniteSemigroup& s) { return clique_number(commuting_graph(s)) >= 2; };
    } else if (theorem == "inverse-chromatic-ge-2") {
        filter = "inverse+non-commutative";
        holds = [](const FiniteSemigroup& s) { return chromatic_number(commuting_graph(s)) >= 2; };
    } else if (theorem == "clifford-no-left-paths") {
        filter = "clifford+non-commutative";
        holds = [](const FiniteSemigroup& s) { return !knit_degree(s).has_value(); };
    } else if (theorem == "cr-knit-ne-1") {
        filter = "completely-regular+non-commutative";
        holds = [](const FiniteSemigroup& s) {
            auto kd = knit_degree(s);
            return !kd || kd->first != 1;
        };
    } else {
        throw unknown_theorem("unknown theorem id: " + theorem);
    }

    TheoremCheckResult result;
    result.theorem = theorem;
    for (int order = 1; order <= max_order; ++order) {
        EnumerationTask task{order, filter, true, allow_order5};
        result.instances_checked += enumerate(task, [&](const FiniteSemigroup& s) {
            if (!holds(s)) {
                result.counterexamples.push_back(s.table());
                result.counterexample_orders.push_back(s.order());
            }
        });
    }
    return result;
}

inline const std::vector<std::string>& known_theorem_ids() {
    static const std::vector<std::string> ids = {
        "inverse-girth-3",
        "inverse-clique-ge-2",
        "inverse-chromatic-ge-2",
        "clifford-no-left-paths",
        "cr-knit-ne-1",
    };
    return ids;
}

}  // namespace sgt

#endif  // SGT_ENUMERATE_HPP
