#ifndef SGT_SEMIGROUP_HPP
#define SGT_SEMIGROUP_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sgt {

using element = int;

struct index_out_of_range : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_associative : std::runtime_error {
    element a, b, c;
    not_associative(element a_, element b_, element c_)
        : std::runtime_error("multiplication table is not associative at (" +
                             std::to_string(a_) + "," + std::to_string(b_) + "," +
                             std::to_string(c_) + ")"),
          a(a_), b(b_), c(c_) {}
};

struct not_inverse_semigroup : std::runtime_error {
    not_inverse_semigroup() : std::runtime_error("semigroup is not an inverse semigroup") {}
};

struct not_completely_regular : std::runtime_error {
    not_completely_regular() : std::runtime_error("semigroup is not completely regular") {}
};

/// Membership bitmask over the element range [0, n).
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(int universe) : n_(universe), bits_((universe + 63) / 64, 0) {}

    int universe() const { return n_; }

    bool contains(element x) const { return (bits_[x >> 6] >> (x & 63)) & 1; }

    void insert(element x) { bits_[x >> 6] |= std::uint64_t{1} << (x & 63); }

    int count() const {
        int c = 0;
        for (auto w : bits_) c += __builtin_popcountll(w);
        return c;
    }

    bool empty() const {
        for (auto w : bits_)
            if (w) return false;
        return true;
    }

    std::vector<element> elements() const {
        std::vector<element> out;
        for (element x = 0; x < n_; ++x)
            if (contains(x)) out.push_back(x);
        return out;
    }

    friend bool operator==(const ElementSet&, const ElementSet&) = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Finite semigroup on elements 0..n-1 given by its full multiplication
/// table. Associativity is checked at construction with a full triple scan;
/// instances are immutable afterwards.
class FiniteSemigroup {
public:
    FiniteSemigroup(int order, std::vector<element> table, std::string name = {})
        : n_(order), table_(std::move(table)), name_(std::move(name)) {
        if (order <= 0) throw index_out_of_range("order must be positive");
        if (table_.size() != static_cast<std::size_t>(order) * order)
            throw index_out_of_range("table length must equal order squared");
        for (element v : table_)
            if (v < 0 || v >= order)
                throw index_out_of_range("table entry " + std::to_string(v) +
                                         " outside [0, " + std::to_string(order) + ")");
        for (element a = 0; a < n_; ++a)
            for (element b = 0; b < n_; ++b) {
                const element ab = at(a, b);
                for (element c = 0; c < n_; ++c)
                    if (at(ab, c) != at(a, at(b, c))) throw not_associative(a, b, c);
            }
    }

    int order() const { return n_; }
    const std::string& name() const { return name_; }

    element at(element a, element b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }

    const std::vector<element>& table() const { return table_; }

    /// Optional display names for elements, parallel to the index range.
    const std::vector<std::string>& element_names() const { return element_names_; }
    void set_element_names(std::vector<std::string> names) { element_names_ = std::move(names); }

    std::string element_name(element x) const {
        if (x < static_cast<element>(element_names_.size())) return element_names_[x];
        return std::to_string(x);
    }

private:
    int n_;
    std::vector<element> table_;
    std::string name_;
    std::vector<std::string> element_names_;
};

inline FiniteSemigroup make_semigroup(int order, std::vector<element> table,
                                      std::string name = {}) {
    return FiniteSemigroup(order, std::move(table), std::move(name));
}

inline ElementSet center(const FiniteSemigroup& s) {
    const int n = s.order();
    ElementSet z(n);
    for (element x = 0; x < n; ++x) {
        bool central = true;
        for (element y = 0; y < n && central; ++y)
            central = s.at(x, y) == s.at(y, x);
        if (central) z.insert(x);
    }
    return z;
}

inline ElementSet idempotents(const FiniteSemigroup& s) {
    ElementSet e(s.order());
    for (element x = 0; x < s.order(); ++x)
        if (s.at(x, x) == x) e.insert(x);
    return e;
}

inline bool is_commutative(const FiniteSemigroup& s) {
    for (element a = 0; a < s.order(); ++a)
        for (element b = a + 1; b < s.order(); ++b)
            if (s.at(a, b) != s.at(b, a)) return false;
    return true;
}

inline bool is_band(const FiniteSemigroup& s) {
    return idempotents(s).count() == s.order();
}

/// Unique two-sided identity, if the semigroup has one.
inline std::optional<element> identity_of(const FiniteSemigroup& s) {
    for (element e = 0; e < s.order(); ++e) {
        bool ok = true;
        for (element x = 0; x < s.order() && ok; ++x)
            ok = s.at(e, x) == x && s.at(x, e) == x;
        if (ok) return e;
    }
    return std::nullopt;
}

inline bool is_group(const FiniteSemigroup& s) {
    auto e = identity_of(s);
    if (!e) return false;
    for (element x = 0; x < s.order(); ++x) {
        bool has_inverse = false;
        for (element y = 0; y < s.order() && !has_inverse; ++y)
            has_inverse = s.at(x, y) == *e && s.at(y, x) == *e;
        if (!has_inverse) return false;
    }
    return true;
}

inline bool is_regular(const FiniteSemigroup& s) {
    for (element x = 0; x < s.order(); ++x) {
        bool reg = false;
        for (element y = 0; y < s.order() && !reg; ++y)
            reg = s.at(s.at(x, y), x) == x;
        if (!reg) return false;
    }
    return true;
}

/// All y with xyx = x and yxy = y.
inline ElementSet inverses_of(const FiniteSemigroup& s, element x) {
    ElementSet out(s.order());
    for (element y = 0; y < s.order(); ++y)
        if (s.at(s.at(x, y), x) == x && s.at(s.at(y, x), y) == y) out.insert(y);
    return out;
}

inline bool is_inverse_semigroup(const FiniteSemigroup& s) {
    if (!is_regular(s)) return false;
    auto e = idempotents(s).elements();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (s.at(e[i], e[j]) != s.at(e[j], e[i])) return false;
    return true;
}

enum class InverseKind { inverse_semigroup, completely_regular };

/// x -> x^{-1} for a whole semigroup, either the unique inverse map of an
/// inverse semigroup or the canonical within-subgroup inverse of a
/// completely regular semigroup.
struct UnaryInverseMap {
    std::vector<element> map;
    InverseKind kind;

    element operator()(element x) const { return map[x]; }
};

inline UnaryInverseMap inverse_map(const FiniteSemigroup& s) {
    if (!is_inverse_semigroup(s)) throw not_inverse_semigroup();
    UnaryInverseMap m{std::vector<element>(s.order()), InverseKind::inverse_semigroup};
    for (element x = 0; x < s.order(); ++x) {
        auto inv = inverses_of(s, x).elements();
        m.map[x] = inv.front();  // unique in an inverse semigroup
    }
    return m;
}

inline bool is_clifford(const FiniteSemigroup& s) {
    if (!is_regular(s)) return false;
    ElementSet z = center(s);
    for (element e : idempotents(s).elements())
        if (!z.contains(e)) return false;
    return true;
}

/// Least (i, p) with x^{i+p} = x^i; i is the index and p the period of the
/// monogenic subsemigroup generated by x.
inline std::pair<int, int> powers(const FiniteSemigroup& s, element x) {
    std::vector<int> seen_at(s.order(), 0);
    element cur = x;
    int k = 1;
    while (seen_at[cur] == 0) {
        seen_at[cur] = k;
        cur = s.at(cur, x);
        ++k;
    }
    const int index = seen_at[cur];
    return {index, k - index};
}

inline bool is_completely_regular(const FiniteSemigroup& s) {
    for (element x = 0; x < s.order(); ++x)
        if (powers(s, x).first != 1) return false;
    return true;
}

/// The canonical inverse inside the cyclic subgroup generated by each
/// element: x^{-1} = x^{p-1} where p is the period (x itself when p = 1).
inline UnaryInverseMap completely_regular_inverse_map(const FiniteSemigroup& s) {
    if (!is_completely_regular(s)) throw not_completely_regular();
    UnaryInverseMap m{std::vector<element>(s.order()), InverseKind::completely_regular};
    for (element x = 0; x < s.order(); ++x) {
        const int p = powers(s, x).second;
        element pw = x;  // x^{p-1}, read as x when p = 1
        for (int k = 1; k < p - 1; ++k) pw = s.at(pw, x);
        m.map[x] = pw;
    }
    return m;
}

/// Principal two-sided ideal S^1 x S^1 as a bitmask.
inline ElementSet principal_ideal(const FiniteSemigroup& s, element x) {
    const int n = s.order();
    ElementSet ideal(n);
    ideal.insert(x);
    for (element a = 0; a < n; ++a) {
        ideal.insert(s.at(a, x));
        ideal.insert(s.at(x, a));
        const element ax = s.at(a, x);
        for (element b = 0; b < n; ++b) ideal.insert(s.at(ax, b));
    }
    return ideal;
}

inline bool is_simple(const FiniteSemigroup& s) {
    for (element x = 0; x < s.order(); ++x)
        if (principal_ideal(s, x).count() != s.order()) return false;
    return true;
}

inline bool is_completely_simple(const FiniteSemigroup& s) {
    return is_simple(s) && is_completely_regular(s);
}

/// Partition of a completely regular semigroup into its completely simple
/// J-classes, together with the induced meet on classes.
struct SemilatticeDecomposition {
    std::vector<int> class_of;                   // element -> class id
    std::vector<std::vector<element>> classes;   // class id -> members
    std::vector<std::vector<int>> meet;          // class id x class id -> class id
    std::vector<bool> class_completely_simple;

    int component_count() const { return static_cast<int>(classes.size()); }
};

inline FiniteSemigroup restrict_to(const FiniteSemigroup& s, const std::vector<element>& subset) {
    std::vector<int> pos(s.order(), -1);
    for (std::size_t i = 0; i < subset.size(); ++i) pos[subset[i]] = static_cast<int>(i);
    const int m = static_cast<int>(subset.size());
    std::vector<element> table(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const element p = s.at(subset[i], subset[j]);
            if (pos[p] < 0) throw index_out_of_range("subset is not closed under the product");
            table[static_cast<std::size_t>(i) * m + j] = pos[p];
        }
    return FiniteSemigroup(m, std::move(table));
}

inline SemilatticeDecomposition semilattice_decomposition(const FiniteSemigroup& s) {
    if (!is_completely_regular(s)) throw not_completely_regular();
    const int n = s.order();

    std::vector<ElementSet> ideal(n);
    for (element x = 0; x < n; ++x) ideal[x] = principal_ideal(s, x);

    SemilatticeDecomposition d;
    d.class_of.assign(n, -1);
    for (element x = 0; x < n; ++x) {
        if (d.class_of[x] >= 0) continue;
        const int id = static_cast<int>(d.classes.size());
        d.classes.emplace_back();
        for (element y = x; y < n; ++y)
            if (d.class_of[y] < 0 && ideal[y] == ideal[x]) {
                d.class_of[y] = id;
                d.classes[id].push_back(y);
            }
    }

    const int k = d.component_count();
    d.meet.assign(k, std::vector<int>(k, -1));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            // All products of C_a x C_b must land in a single class.
            int target = -1;
            for (element x : d.classes[a])
                for (element y : d.classes[b]) {
                    const int c = d.class_of[s.at(x, y)];
                    if (target < 0) target = c;
                    else if (target != c)
                        throw not_completely_regular();
                }
            d.meet[a][b] = target;
        }

    d.class_completely_simple.resize(k);
    for (int a = 0; a < k; ++a)
        d.class_completely_simple[a] = is_completely_simple(restrict_to(s, d.classes[a]));
    return d;
}

}  // namespace sgt

#endif  // SGT_SEMIGROUP_HPP
