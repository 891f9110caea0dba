#ifndef SGT_CONSTRUCTIONS_HPP
#define SGT_CONSTRUCTIONS_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "partial_map.hpp"
#include "semigroup.hpp"

namespace sgt {

struct too_large : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct bad_params : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invalid_sandwich_entry : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Desk-scale guardrails for the builders. Not hard limits: callers may
/// raise them (the CLI honours SGT_SIZE_CAP).
struct ConstructionLimits {
    int max_transformation_points = 5;
    int max_partial_injection_points = 4;
    int max_permutation_points = 6;
    long product_order_cap = 5000;
};

namespace detail {

inline FiniteSemigroup table_from_maps(std::vector<PartialMap> elems, std::string name) {
    std::sort(elems.begin(), elems.end());
    std::map<PartialMap, element> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<element>(i);

    const int n = static_cast<int>(elems.size());
    std::vector<element> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto it = index.find(elems[a].then(elems[b]));
            if (it == index.end()) throw bad_params("map set is not closed under composition");
            table[static_cast<std::size_t>(a) * n + b] = it->second;
        }
    FiniteSemigroup s(n, std::move(table), std::move(name));
    std::vector<std::string> names;
    names.reserve(elems.size());
    for (const auto& m : elems) names.push_back(m.to_literal());
    s.set_element_names(std::move(names));
    return s;
}

inline std::string cycle_notation(const PartialMap& p) {
    std::vector<bool> done(p.degree(), false);
    std::string out;
    for (int x = 0; x < p.degree(); ++x) {
        if (done[x] || p.apply(x) == x) continue;
        out += '(';
        int cur = x;
        bool first = true;
        while (!done[cur]) {
            done[cur] = true;
            if (!first) out += ' ';
            out += std::to_string(cur + 1);
            first = false;
            cur = p.apply(cur);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

}  // namespace detail

/// All total maps on m points under composition, order m^m.
inline FiniteSemigroup full_transformation_monoid(int m, const ConstructionLimits& limits = {}) {
    if (m < 1) throw bad_params("point count must be positive");
    if (m > limits.max_transformation_points)
        throw too_large("transformation monoid on " + std::to_string(m) + " points exceeds cap");
    long count = 1;
    for (int i = 0; i < m; ++i) count *= m;
    std::vector<PartialMap> elems;
    elems.reserve(count);
    for (long code = 0; code < count; ++code) {
        PartialMap f(m);
        long c = code;
        for (int x = 0; x < m; ++x) {
            f.set(x, static_cast<int>(c % m));
            c /= m;
        }
        elems.push_back(f);
    }
    return detail::table_from_maps(std::move(elems), "T" + std::to_string(m));
}

/// All injective partial maps on m points, order sum_k C(m,k)^2 k!.
inline FiniteSemigroup symmetric_inverse_monoid(int m, const ConstructionLimits& limits = {}) {
    if (m < 1) throw bad_params("point count must be positive");
    if (m > limits.max_partial_injection_points)
        throw too_large("partial injection monoid on " + std::to_string(m) + " points exceeds cap");
    std::vector<PartialMap> elems;
    PartialMap work(m);
    auto extend = [&](auto&& self, int x) -> void {
        if (x == m) {
            if (work.is_injective()) elems.push_back(work);
            return;
        }
        for (int y = PartialMap::undefined; y < m; ++y) {
            work.set(x, y);
            self(self, x + 1);
        }
        work.set(x, PartialMap::undefined);
    };
    extend(extend, 0);
    return detail::table_from_maps(std::move(elems), "I" + std::to_string(m));
}

inline FiniteSemigroup symmetric_group(int m, const ConstructionLimits& limits = {}) {
    if (m < 1) throw bad_params("point count must be positive");
    if (m > limits.max_permutation_points)
        throw too_large("symmetric group on " + std::to_string(m) + " points exceeds cap");
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<PartialMap> elems;
    do {
        elems.emplace_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    auto s = detail::table_from_maps(std::move(elems), "Sym" + std::to_string(m));
    std::vector<std::string> names;
    for (int i = 0; i < s.order(); ++i)
        names.push_back(detail::cycle_notation(PartialMap::from_literal(s.element_names()[i])));
    s.set_element_names(std::move(names));
    return s;
}

inline FiniteSemigroup alternating_group(int m, const ConstructionLimits& limits = {}) {
    if (m < 1) throw bad_params("point count must be positive");
    if (m > limits.max_permutation_points)
        throw too_large("alternating group on " + std::to_string(m) + " points exceeds cap");
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<PartialMap> elems;
    do {
        int inversions = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (perm[i] > perm[j]) ++inversions;
        if (inversions % 2 == 0) elems.emplace_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    auto s = detail::table_from_maps(std::move(elems), "Alt" + std::to_string(m));
    std::vector<std::string> names;
    for (int i = 0; i < s.order(); ++i)
        names.push_back(detail::cycle_notation(PartialMap::from_literal(s.element_names()[i])));
    s.set_element_names(std::move(names));
    return s;
}

inline FiniteSemigroup cyclic_group(int m) {
    if (m < 1) throw bad_params("order must be positive");
    std::vector<element> table(static_cast<std::size_t>(m) * m);
    for (element a = 0; a < m; ++a)
        for (element b = 0; b < m; ++b)
            table[static_cast<std::size_t>(a) * m + b] = (a + b) % m;
    FiniteSemigroup s(m, std::move(table), "C" + std::to_string(m));
    std::vector<std::string> names;
    for (int i = 0; i < m; ++i) names.push_back("g" + std::to_string(i));
    s.set_element_names(std::move(names));
    return s;
}

/// Group + index sets + Lambda x I sandwich matrix of group elements.
struct ReesMatrixData {
    FiniteSemigroup group;
    int i_size;
    int lambda_size;
    std::vector<element> sandwich;  // row-major, entry(lambda, i)

    element p(int lambda, int i) const { return sandwich[static_cast<std::size_t>(lambda) * i_size + i]; }
};

/// I x G x Lambda with product (i,x,l)(j,y,m) = (i, x p_{lj} y, m).
inline FiniteSemigroup rees_matrix(const ReesMatrixData& data) {
    if (data.i_size < 1 || data.lambda_size < 1) throw bad_params("index sets must be non-empty");
    if (!is_group(data.group)) throw bad_params("Rees construction requires a group");
    if (data.sandwich.size() != static_cast<std::size_t>(data.i_size) * data.lambda_size)
        throw invalid_sandwich_entry("sandwich matrix must be Lambda x I");
    for (element g : data.sandwich)
        if (g < 0 || g >= data.group.order())
            throw invalid_sandwich_entry("sandwich entry is not a group element");

    const int gn = data.group.order();
    const int n = data.i_size * gn * data.lambda_size;
    auto code = [&](int i, element g, int lambda) {
        return (i * gn + g) * data.lambda_size + lambda;
    };
    std::vector<element> table(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < data.i_size; ++i)
        for (element x = 0; x < gn; ++x)
            for (int lambda = 0; lambda < data.lambda_size; ++lambda)
                for (int j = 0; j < data.i_size; ++j)
                    for (element y = 0; y < gn; ++y)
                        for (int mu = 0; mu < data.lambda_size; ++mu) {
                            const element prod = data.group.at(data.group.at(x, data.p(lambda, j)), y);
                            table[static_cast<std::size_t>(code(i, x, lambda)) * n +
                                  code(j, y, mu)] = code(i, prod, mu);
                        }
    FiniteSemigroup s(n, std::move(table), "Rees[" + data.group.name() + "]");
    std::vector<std::string> names(n);
    for (int i = 0; i < data.i_size; ++i)
        for (element g = 0; g < gn; ++g)
            for (int lambda = 0; lambda < data.lambda_size; ++lambda)
                names[code(i, g, lambda)] = "(" + std::to_string(i) + "," +
                                            data.group.element_name(g) + "," +
                                            std::to_string(lambda) + ")";
    s.set_element_names(std::move(names));
    return s;
}

/// Disjoint union of the parts plus a new zero element (index 0) that
/// absorbs every cross-part product.
inline FiniteSemigroup zero_union(const std::vector<FiniteSemigroup>& parts) {
    if (parts.size() < 2) throw bad_params("zero-union needs at least two parts");
    int n = 1;
    std::vector<int> offset;
    for (const auto& p : parts) {
        offset.push_back(n);
        n += p.order();
    }
    std::vector<element> table(static_cast<std::size_t>(n) * n, 0);
    for (std::size_t k = 0; k < parts.size(); ++k)
        for (element a = 0; a < parts[k].order(); ++a)
            for (element b = 0; b < parts[k].order(); ++b)
                table[static_cast<std::size_t>(offset[k] + a) * n + offset[k] + b] =
                    offset[k] + parts[k].at(a, b);
    std::string name = "0U(";
    for (std::size_t k = 0; k < parts.size(); ++k)
        name += (k ? "," : "") + parts[k].name();
    FiniteSemigroup s(n, std::move(table), name + ")");
    std::vector<std::string> names(n);
    names[0] = "0";
    for (std::size_t k = 0; k < parts.size(); ++k)
        for (element a = 0; a < parts[k].order(); ++a)
            names[offset[k] + a] = std::to_string(k) + ":" + parts[k].element_name(a);
    s.set_element_names(std::move(names));
    return s;
}

inline FiniteSemigroup direct_product(const std::vector<FiniteSemigroup>& parts,
                                      const ConstructionLimits& limits = {}) {
    if (parts.size() < 2) throw bad_params("direct product needs at least two parts");
    long n = 1;
    for (const auto& p : parts) {
        n *= p.order();
        if (n > limits.product_order_cap)
            throw too_large("direct product order exceeds cap of " +
                            std::to_string(limits.product_order_cap));
    }
    const int nn = static_cast<int>(n);
    // Mixed-radix coding, last part fastest.
    auto decode = [&](int x) {
        std::vector<element> c(parts.size());
        for (std::size_t k = parts.size(); k-- > 0;) {
            c[k] = x % parts[k].order();
            x /= parts[k].order();
        }
        return c;
    };
    auto encode = [&](const std::vector<element>& c) {
        int x = 0;
        for (std::size_t k = 0; k < parts.size(); ++k) x = x * parts[k].order() + c[k];
        return x;
    };
    std::vector<element> table(static_cast<std::size_t>(nn) * nn);
    for (int a = 0; a < nn; ++a) {
        const auto ca = decode(a);
        for (int b = 0; b < nn; ++b) {
            auto cb = decode(b);
            for (std::size_t k = 0; k < parts.size(); ++k) cb[k] = parts[k].at(ca[k], cb[k]);
            table[static_cast<std::size_t>(a) * nn + b] = encode(cb);
        }
    }
    std::string name;
    for (std::size_t k = 0; k < parts.size(); ++k) name += (k ? "x" : "") + parts[k].name();
    FiniteSemigroup s(nn, std::move(table), name);
    std::vector<std::string> names(nn);
    for (int x = 0; x < nn; ++x) {
        const auto c = decode(x);
        std::string label = "(";
        for (std::size_t k = 0; k < parts.size(); ++k)
            label += (k ? "," : "") + parts[k].element_name(c[k]);
        names[x] = label + ")";
    }
    s.set_element_names(std::move(names));
    return s;
}

/// The four-element band whose commuting graph is a 4-cycle. Elements are
/// a1, a2, b1, b2 in that order.
inline FiniteSemigroup girth4_band() {
    FiniteSemigroup s(4,
                      {
                          0, 1, 0, 0,  // a1
                          0, 1, 1, 1,  // a2
                          0, 1, 2, 2,  // b1
                          0, 1, 3, 3,  // b2
                      },
                      "girth4band");
    s.set_element_names({"a1", "a2", "b1", "b2"});
    return s;
}

struct bad_n : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Labels for the order-n^2 band whose commuting graph has girth 2n.
struct GirthFamilySpec {
    int n;

    element alpha(int i) const { return i; }
    element beta(int i, int j) const { return n + i * (n - 1) + (j - 1); }

    bool is_alpha(element x) const { return x < n; }
    int alpha_index(element x) const { return x; }
    int beta_index(element x) const { return (x - n) / (n - 1); }
    int beta_super(element x) const { return (x - n) % (n - 1) + 1; }

    std::string label(element x) const {
        if (is_alpha(x)) return "a" + std::to_string(x);
        return "b" + std::to_string(beta_index(x)) + "^" + std::to_string(beta_super(x));
    }
};

/// Band of order n^2 (n >= 3) built directly from its four product laws:
///   a_i a_k   = a_k
///   b_i^j b_k^m = b_k^m
///   a_i b_k^m = b_k^m
///   b_k^m a_i = b_k^1 when k = i, else b_k^l where k = i + l (mod n).
inline FiniteSemigroup girth_2n_family(int n) {
    if (n < 3) throw bad_n("girth family requires n >= 3");
    GirthFamilySpec spec{n};
    const int order = n * n;
    std::vector<element> table(static_cast<std::size_t>(order) * order);
    auto set = [&](element a, element b, element v) {
        table[static_cast<std::size_t>(a) * order + b] = v;
    };
    for (element x = 0; x < order; ++x)
        for (int k = 0; k < n; ++k) {
            set(x, spec.alpha(k), spec.alpha(k));  // overwritten below when x is a beta
            for (int m = 1; m < n; ++m) set(x, spec.beta(k, m), spec.beta(k, m));
        }
    for (int k = 0; k < n; ++k)
        for (int m = 1; m < n; ++m)
            for (int i = 0; i < n; ++i) {
                const int l = ((k - i) % n + n) % n;
                set(spec.beta(k, m), spec.alpha(i), l == 0 ? spec.beta(k, 1) : spec.beta(k, l));
            }
    FiniteSemigroup s(order, std::move(table), "girthfamily" + std::to_string(n));
    std::vector<std::string> names(order);
    for (element x = 0; x < order; ++x) names[x] = spec.label(x);
    s.set_element_names(std::move(names));
    return s;
}

/// Independent realization of girth_2n_family as total maps on n(n-1)
/// points, with elements ordered to match the abstract labeling.
inline FiniteSemigroup girth_2n_family_from_maps(int n) {
    if (n < 3) throw bad_n("girth family requires n >= 3");
    GirthFamilySpec spec{n};
    const int points = n * (n - 1);
    auto point = [&](int i, int j) { return i * (n - 1) + (j - 1); };  // x_i^j

    std::vector<PartialMap> elems;
    for (int i = 0; i < n; ++i) {
        PartialMap a(points);
        for (int x = 0; x < points; ++x) a.set(x, point(x / (n - 1), 1));
        // X_i collapses to x_i^1; X_{i+j mod n} collapses to x_{i+j mod n}^j.
        for (int j = 1; j < n; ++j) {
            const int t = (i + j) % n;
            for (int sjs = 1; sjs < n; ++sjs) a.set(point(t, sjs), point(t, j));
        }
        for (int sjs = 1; sjs < n; ++sjs) a.set(point(i, sjs), point(i, 1));
        elems.push_back(a);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            PartialMap b(points);
            for (int x = 0; x < points; ++x) b.set(x, point(i, j));
            elems.push_back(b);
        }

    const int order = n * n;
    std::vector<element> table(static_cast<std::size_t>(order) * order);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            const PartialMap prod = elems[a].then(elems[b]);
            element found = -1;
            for (int c = 0; c < order; ++c)
                if (elems[c] == prod) {
                    found = c;
                    break;
                }
            if (found < 0) throw bad_params("map realization is not closed");
            table[static_cast<std::size_t>(a) * order + b] = found;
        }
    FiniteSemigroup s(order, std::move(table), "girthfamilymaps" + std::to_string(n));
    std::vector<std::string> names(order);
    for (element x = 0; x < order; ++x) names[x] = spec.label(x);
    s.set_element_names(std::move(names));
    return s;
}

/// Right-translation embedding of an inverse semigroup into the partial
/// injections on its own underlying set: x -> r_x with
/// dom r_x = { s : s (x x^{-1}) = s } and (s) r_x = s x.
inline std::vector<PartialMap> vagner_preston(const FiniteSemigroup& s) {
    const UnaryInverseMap inv = inverse_map(s);  // throws when not inverse
    std::vector<PartialMap> out;
    out.reserve(s.order());
    for (element x = 0; x < s.order(); ++x) {
        const element xxinv = s.at(x, inv(x));
        PartialMap rho(s.order());
        for (element t = 0; t < s.order(); ++t)
            if (s.at(t, xxinv) == t) rho.set(t, s.at(t, x));
        out.push_back(rho);
    }
    return out;
}

}  // namespace sgt

#endif  // SGT_CONSTRUCTIONS_HPP
