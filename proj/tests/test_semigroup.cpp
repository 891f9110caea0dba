#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sgt/constructions.hpp"
#include "sgt/semigroup.hpp"

using namespace sgt;

TEST_CASE("construction rejects a non-associative table at its first bad triple") {
    try {
        FiniteSemigroup s(2, {0, 0, 1, 0});
        FAIL("table accepted");
    } catch (const not_associative& e) {
        // (1*0)*1 = 1*1 = 0 but 1*(0*1) = 1*0 = 1
        CHECK(e.a == 1);
        CHECK(e.b == 0);
        CHECK(e.c == 1);
    }
}

TEST_CASE("construction rejects out-of-range entries and bad sizes") {
    CHECK_THROWS_AS(FiniteSemigroup(2, {0, 0, 0, 2}), index_out_of_range);
    CHECK_THROWS_AS(FiniteSemigroup(2, {0, 0, 0}), index_out_of_range);
    CHECK_THROWS_AS(FiniteSemigroup(0, {}), index_out_of_range);
}

TEST_CASE("left-zero band of order 2") {
    FiniteSemigroup s(2, {0, 0, 1, 1});
    CHECK(is_band(s));
    CHECK(!is_commutative(s));
    CHECK(center(s).empty());
    CHECK(is_regular(s));
    CHECK(is_completely_regular(s));
    CHECK(!is_inverse_semigroup(s));  // the two idempotents do not commute
    CHECK(is_simple(s));
    CHECK(is_completely_simple(s));
}

TEST_CASE("symmetric group on 3 points") {
    const auto s = symmetric_group(3);
    REQUIRE(s.order() == 6);
    CHECK(is_group(s));
    CHECK(!is_commutative(s));
    CHECK(center(s).count() == 1);  // identity only
    CHECK(center(s).contains(*identity_of(s)));
    CHECK(is_inverse_semigroup(s));
    CHECK(is_clifford(s));
    CHECK(is_completely_regular(s));
    CHECK(is_completely_simple(s));
    const auto inv = inverse_map(s);
    for (element x = 0; x < s.order(); ++x) {
        CHECK(s.at(x, inv(x)) == *identity_of(s));
        CHECK(inv(inv(x)) == x);
    }
}

TEST_CASE("partial injection monoid on 2 points") {
    const auto s = symmetric_inverse_monoid(2);
    REQUIRE(s.order() == 7);
    CHECK(idempotents(s).count() == 4);
    CHECK(is_regular(s));
    CHECK(is_inverse_semigroup(s));
    CHECK(!is_clifford(s));
    CHECK(!is_completely_regular(s));
    CHECK(center(s).count() == 2);  // empty map and identity
}

TEST_CASE("every element of a rectangular band has many inverses") {
    // 2x2 rectangular band: (a,b)(c,d) = (a,d).
    std::vector<element> table(16);
    for (element x = 0; x < 4; ++x)
        for (element y = 0; y < 4; ++y)
            table[static_cast<std::size_t>(x) * 4 + y] = (x & 2) | (y & 1);
    FiniteSemigroup s(4, std::move(table));
    CHECK(is_band(s));
    for (element x = 0; x < 4; ++x) CHECK(inverses_of(s, x).count() == 4);
    CHECK(!is_inverse_semigroup(s));
}

TEST_CASE("monogenic semigroup with index 2 is not regular") {
    // x, x^2 = x^3: table over {x=0, x^2=1}.
    FiniteSemigroup s(2, {1, 1, 1, 1});
    CHECK(powers(s, 0) == std::pair<int, int>{2, 1});
    CHECK(powers(s, 1) == std::pair<int, int>{1, 1});
    CHECK(!is_regular(s));
    CHECK(!is_completely_regular(s));
    CHECK_THROWS_AS(completely_regular_inverse_map(s), not_completely_regular);
    CHECK_THROWS_AS(inverse_map(s), not_inverse_semigroup);
}

TEST_CASE("powers and the group inverse in a cyclic group") {
    const auto s = cyclic_group(6);
    CHECK(powers(s, 1) == std::pair<int, int>{1, 6});
    CHECK(powers(s, 2) == std::pair<int, int>{1, 3});
    CHECK(powers(s, 0) == std::pair<int, int>{1, 1});
    const auto inv = completely_regular_inverse_map(s);
    for (element x = 0; x < 6; ++x) CHECK(s.at(x, inv(x)) == s.at(s.at(x, inv(x)), s.at(x, inv(x))));
    CHECK(inv(2) == 4);
    CHECK(inv(0) == 0);
}

TEST_CASE("the two inverse maps agree on a Clifford semigroup") {
    const auto s = zero_union({alternating_group(4), symmetric_group(3)});
    REQUIRE(is_clifford(s));
    const auto a = inverse_map(s);
    const auto b = completely_regular_inverse_map(s);
    CHECK(a.map == b.map);
    CHECK(a.kind == InverseKind::inverse_semigroup);
    CHECK(b.kind == InverseKind::completely_regular);
}

TEST_CASE("principal ideals and simplicity") {
    const auto g = symmetric_group(3);
    CHECK(is_simple(g));
    const auto s = zero_union({symmetric_group(3), symmetric_group(3)});
    CHECK(!is_simple(s));
    CHECK(principal_ideal(s, 0).count() == 1);  // the zero
}

TEST_CASE("semilattice decomposition of a zero-union") {
    const auto s = zero_union({alternating_group(4), symmetric_group(3), symmetric_group(3)});
    REQUIRE(is_completely_regular(s));
    const auto d = semilattice_decomposition(s);
    CHECK(d.component_count() == 4);  // zero + three group classes
    for (int c = 0; c < d.component_count(); ++c) {
        CHECK(d.class_completely_simple[c]);
        // meet with the zero class is the zero class
        CHECK(d.meet[c][d.class_of[0]] == d.class_of[0]);
        CHECK(d.meet[c][c] == c);
    }
    // distinct non-zero classes meet in the zero class
    const int c1 = d.class_of[1], c2 = d.class_of[1 + 12];
    CHECK(c1 != c2);
    CHECK(d.meet[c1][c2] == d.class_of[0]);
}

TEST_CASE("restrict_to rejects subsets that are not closed") {
    const auto s = symmetric_group(3);
    CHECK_THROWS_AS(restrict_to(s, {1, 2}), index_out_of_range);
}

TEST_CASE("element sets behave as sets") {
    ElementSet a(70);
    CHECK(a.empty());
    a.insert(0);
    a.insert(69);
    CHECK(a.count() == 2);
    CHECK(a.contains(69));
    CHECK(!a.contains(1));
    CHECK(a.elements() == std::vector<element>{0, 69});
}
