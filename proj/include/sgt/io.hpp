#ifndef SGT_IO_HPP
#define SGT_IO_HPP

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "graph.hpp"
#include "semigroup.hpp"

namespace sgt {

struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

struct unknown_format : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// sgt-table v1: line 1 holds n, lines 2..n+1 hold n space-separated
/// 0-based entries (row a gives a.b for b = 0..n-1). Trailing lines
/// starting with '#' are comments.
inline void write_table(std::ostream& out, const FiniteSemigroup& s) {
    out << s.order() << '\n';
    for (element a = 0; a < s.order(); ++a) {
        for (element b = 0; b < s.order(); ++b) {
            if (b) out << ' ';
            out << s.at(a, b);
        }
        out << '\n';
    }
    if (!s.name().empty()) out << "# " << s.name() << '\n';
}

/// Reads one sgt-table block. Returns nullopt at end of input; skips
/// leading blank lines (the stream separator) and trailing comments.
/// line_no tracks position for error reporting across a whole stream.
inline std::optional<FiniteSemigroup> read_table(std::istream& in, int& line_no) {
    std::string line;
    // Skip separators and comments between blocks.
    while (std::getline(in, line)) {
        ++line_no;
        std::string trimmed = line;
        while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' ')) trimmed.pop_back();
        if (trimmed.empty() || trimmed[0] == '#') continue;
        break;
    }
    if (!in && line.empty()) return std::nullopt;

    int n = 0;
    {
        std::istringstream hs(line);
        if (!(hs >> n) || n <= 0) throw parse_error(line_no, "expected positive order");
        std::string rest;
        if (hs >> rest && rest[0] != '#') throw parse_error(line_no, "unexpected token after order");
    }
    std::vector<element> table;
    table.reserve(static_cast<std::size_t>(n) * n);
    for (int row = 0; row < n; ++row) {
        if (!std::getline(in, line)) throw parse_error(line_no, "unexpected end of table");
        ++line_no;
        std::istringstream rs(line);
        for (int col = 0; col < n; ++col) {
            element v;
            if (!(rs >> v)) throw parse_error(line_no, "expected " + std::to_string(n) + " entries");
            table.push_back(v);
        }
        std::string rest;
        if (rs >> rest && rest[0] != '#') throw parse_error(line_no, "too many entries in row");
    }
    try {
        return FiniteSemigroup(n, std::move(table));
    } catch (const std::exception& e) {
        throw parse_error(line_no, e.what());
    }
}

inline std::optional<FiniteSemigroup> read_table(std::istream& in) {
    int line_no = 0;
    return read_table(in, line_no);
}

inline std::string vertex_label(const SimpleGraph& g, const FiniteSemigroup& s, int v) {
    return s.element_name(g.vertex_labels()[v]);
}

/// DOT export; vertices ascending by element index, edges lexicographic.
inline std::string export_dot(const SimpleGraph& g, const FiniteSemigroup& s) {
    std::ostringstream out;
    out << "graph commuting {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out << "  v" << v << " [label=\"" << vertex_label(g, s, v) << "\"];\n";
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.adjacent(u, v)) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

inline nlohmann::json metrics_json(const GraphMetrics& m) {
    nlohmann::json j;
    j["vertex_count"] = m.vertex_count;
    j["edge_count"] = m.edge_count;
    j["component_count"] = m.component_count;
    j["cycle_space_dim"] = m.cycle_space_dim;
    j["girth"] = m.girth ? nlohmann::json(*m.girth) : nlohmann::json(nullptr);
    j["clique_number"] = m.clique_number;
    j["chromatic_number"] = m.chromatic_number;
    j["diameter"] = m.diameter ? nlohmann::json(*m.diameter) : nlohmann::json(nullptr);
    return j;
}

inline std::string export_json(const SimpleGraph& g, const FiniteSemigroup& s) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (int v = 0; v < g.vertex_count(); ++v) j["vertices"].push_back(vertex_label(g, s, v));
    j["edges"] = nlohmann::json::array();
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.adjacent(u, v)) j["edges"].push_back({u, v});
    j["metrics"] = metrics_json(graph_metrics(g));
    return j.dump(2);
}

inline std::string export_graph(const SimpleGraph& g, const FiniteSemigroup& s,
                                const std::string& format) {
    if (format == "dot") return export_dot(g, s);
    if (format == "json") return export_json(g, s);
    throw unknown_format("unknown export format: " + format);
}

}  // namespace sgt

#endif  // SGT_IO_HPP
