#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "sgt/constructions.hpp"
#include "sgt/io.hpp"

using namespace sgt;

TEST_CASE("tables round-trip through the text format") {
    const auto s = symmetric_group(3);
    std::stringstream buf;
    write_table(buf, s);
    const auto back = read_table(buf);
    REQUIRE(back.has_value());
    CHECK(back->order() == s.order());
    CHECK(back->table() == s.table());
    CHECK(!read_table(buf).has_value());  // single block
}

TEST_CASE("comments and blank lines are skipped between blocks") {
    std::stringstream buf("# a comment\n\n2\n0 1\n1 0\n# trailing\n\n\n1\n0\n");
    const auto first = read_table(buf);
    REQUIRE(first.has_value());
    CHECK(first->order() == 2);
    const auto second = read_table(buf);
    REQUIRE(second.has_value());
    CHECK(second->order() == 1);
    CHECK(!read_table(buf).has_value());
}

TEST_CASE("parse errors carry line numbers") {
    std::stringstream short_row("2\n0 1\n1\n");
    CHECK_THROWS_WITH_AS(read_table(short_row), "line 3: expected 2 entries", parse_error);
    std::stringstream bad_order("zero\n");
    CHECK_THROWS_AS(read_table(bad_order), parse_error);
    std::stringstream truncated("3\n0 1 2\n");
    CHECK_THROWS_AS(read_table(truncated), parse_error);
    std::stringstream negative("-1\n");
    CHECK_THROWS_AS(read_table(negative), parse_error);
    std::stringstream out_of_range("2\n0 1\n1 2\n");
    CHECK_THROWS_AS(read_table(out_of_range), parse_error);
    std::stringstream not_assoc("2\n0 0\n1 0\n");
    CHECK_THROWS_AS(read_table(not_assoc), parse_error);
}

TEST_CASE("a stream of blocks reads back in order") {
    std::stringstream buf;
    write_table(buf, cyclic_group(2));
    buf << '\n';
    write_table(buf, symmetric_group(3));
    int line_no = 0;
    const auto a = read_table(buf, line_no);
    const auto b = read_table(buf, line_no);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->order() == 2);
    CHECK(b->order() == 6);
}

TEST_CASE("DOT export lists every vertex and edge with stable names") {
    const auto s = girth4_band();
    const auto g = commuting_graph(s);
    const std::string dot = export_dot(g, s);
    CHECK(dot.find("graph commuting {") == 0);
    CHECK(dot.find("v0 [label=\"a1\"]") != std::string::npos);
    CHECK(dot.find("v3 [label=\"b2\"]") != std::string::npos);
    CHECK(dot.find("--") != std::string::npos);
    // 4 vertices + 4 edges + frame
    int edges = 0;
    for (std::size_t p = dot.find("--"); p != std::string::npos; p = dot.find("--", p + 1)) ++edges;
    CHECK(edges == 4);
}

TEST_CASE("JSON export carries labels, edges and metrics") {
    const auto s = girth4_band();
    const auto g = commuting_graph(s);
    const auto j = nlohmann::json::parse(export_json(g, s));
    CHECK(j["vertices"].size() == 4);
    CHECK(j["edges"].size() == 4);
    CHECK(j["metrics"]["girth"] == 4);
    CHECK(j["metrics"]["clique_number"] == 2);
    CHECK(j["metrics"]["chromatic_number"] == 2);
    CHECK(j["metrics"]["vertex_count"] == 4);
    CHECK(j["metrics"]["cycle_space_dim"] == 1);
}

TEST_CASE("acyclic graphs export a null girth") {
    const auto s = symmetric_group(3);
    const auto j = nlohmann::json::parse(export_json(commuting_graph(s), s));
    CHECK(j["metrics"]["girth"].is_null());
    CHECK(j["metrics"]["diameter"].is_null());  // 5 vertices, 1 edge: disconnected
}

TEST_CASE("unknown export formats are rejected") {
    const auto s = girth4_band();
    const auto g = commuting_graph(s);
    CHECK_THROWS_AS(export_graph(g, s, "svg"), unknown_format);
    CHECK(export_graph(g, s, "dot") == export_dot(g, s));
    CHECK(export_graph(g, s, "json") == export_json(g, s));
}
