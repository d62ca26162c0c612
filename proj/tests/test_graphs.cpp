#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qba/graphs.hpp"
#include "qba/harness.hpp"
#include "qba/pbw.hpp"

using namespace qba;

namespace {

using W = std::set<std::pair<int, int>>;

// Strictly-upper-triangular obstruction set under a vertex ordering: the
// obstruction graph of a skew polynomial ring.
W triangular_w(const std::vector<int>& asc) {
    W w;
    for (size_t i = 0; i < asc.size(); ++i)
        for (size_t j = i + 1; j < asc.size(); ++j) w.insert({asc[j], asc[i]});
    return w;
}

}  // namespace

TEST_CASE("the two graphs are exact complements") {
    W w = {{0, 0}, {0, 1}, {2, 1}};
    auto [gn, gw] = build_graphs(3, w);
    CHECK(gn.kind == GraphKind::Normal);
    CHECK(gw.kind == GraphKind::Obstruction);
    CHECK(gn.edge_count() + gw.edge_count() == 9);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) CHECK(gn.edge(a, b) != gw.edge(a, b));
    CHECK(gw.edge(0, 0));
    CHECK_FALSE(gn.edge(0, 1));
}

TEST_CASE("empty obstruction set: free algebra, gldim 1") {
    auto [gn, gw] = build_graphs(2, {});
    auto g = growth_and_gldim(gn, gw, 5);
    CHECK(g.hilbert == std::vector<BigInt>{1, 2, 4, 8, 16, 32});
    CHECK_FALSE(g.polynomial);
    REQUIRE(g.gldim.has_value());
    CHECK(*g.gldim == 1);
}

TEST_CASE("full obstruction set: truncated algebra, infinite gldim") {
    W w;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) w.insert({a, b});
    auto [gn, gw] = build_graphs(2, w);
    auto g = growth_and_gldim(gn, gw, 4);
    CHECK(g.hilbert == std::vector<BigInt>{1, 2, 0, 0, 0});
    CHECK(g.polynomial);  // eventually zero is polynomial (degree 0)
    CHECK_FALSE(g.gldim.has_value());
}

TEST_CASE("single obstruction xy on two generators") {
    W w = {{0, 1}};
    auto [gn, gw] = build_graphs(2, w);
    auto g = growth_and_gldim(gn, gw, 5);
    CHECK(g.hilbert == std::vector<BigInt>{1, 2, 3, 4, 5, 6});
    CHECK(g.polynomial);
    REQUIRE(g.degree.has_value());
    CHECK(*g.degree == 2);
    REQUIRE(g.gldim.has_value());
    CHECK(*g.gldim == 2);
    auto verdict = monomial_algebra_check(2, w);
    for (bool c : verdict.conditions) CHECK(c);
    CHECK(verdict.value);
}

TEST_CASE("triangular obstruction set behaves like a polynomial ring") {
    auto w = triangular_w({2, 0, 1});  // order 2 < 0 < 1
    auto [gn, gw] = build_graphs(3, w);
    auto g = growth_and_gldim(gn, gw, 6);
    for (int m = 0; m <= 6; ++m) CHECK(g.hilbert[m] == binomial(3 + m - 1, m));
    CHECK(g.polynomial);
    CHECK(*g.degree == 3);
    CHECK(*g.gldim == 3);
    CHECK(is_acyclic_tournament(gw));
    auto relabel = tournament_relabel(gw);
    CHECK(relabel == std::vector<int>{2, 0, 1});
    auto verdict = monomial_algebra_check(3, w);
    CHECK(verdict.value);
    for (bool c : verdict.conditions) CHECK(c);
}

TEST_CASE("non-tournament and cyclic obstruction sets are rejected as tournaments") {
    auto [gn1, gw1] = build_graphs(3, {{0, 1}});  // too few edges
    CHECK_FALSE(is_acyclic_tournament(gw1));
    W cyc = {{0, 1}, {1, 2}, {2, 0}};  // 3-cycle
    auto [gn2, gw2] = build_graphs(3, cyc);
    CHECK_FALSE(is_acyclic_tournament(gw2));
    auto verdict = monomial_algebra_check(3, cyc);
    CHECK_FALSE(verdict.value);
    for (bool c : verdict.conditions) CHECK_FALSE(c);
}

TEST_CASE("random acyclic tournaments have polynomial-ring invariants") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 4 + static_cast<int>(rng() % 3);
        std::vector<int> asc(n);
        std::iota(asc.begin(), asc.end(), 0);
        std::shuffle(asc.begin(), asc.end(), rng);
        auto w = triangular_w(asc);
        auto [gn, gw] = build_graphs(n, w);
        auto g = growth_and_gldim(gn, gw, 8);
        for (int m = 0; m <= 8; ++m) CHECK(g.hilbert[m] == binomial(n + m - 1, m));
        CHECK(*g.gldim == n);
        CHECK(*g.degree == n);
        CHECK(tournament_relabel(gw) == asc);
    }
}

TEST_CASE("obstruction graph of example 3 under t > x > z > y") {
    auto rep = check_pbw(example3_relations(), DegLexOrder{{1, 2, 0, 3}});
    auto [gn, gw] = build_graphs(4, rep.obstructions);
    CHECK(is_acyclic_tournament(gw));
    auto g = growth_and_gldim(gn, gw, 5);
    CHECK(g.hilbert == std::vector<BigInt>{1, 4, 10, 20, 35, 56});
    CHECK(*g.gldim == 4);
    CHECK(g.polynomial);
    // Ascending relabel: y < z < x < t.
    CHECK(tournament_relabel(gw) == std::vector<int>{1, 2, 0, 3});
}

TEST_CASE("hilbert coefficients count paths exactly") {
    // Path graph 0 -> 1 -> 2 plus loops on nothing: m-vertex paths.
    QuadGraph g;
    g.n = 3;
    g.adj.assign(9, 0);
    g.adj[0 * 3 + 1] = 1;
    g.adj[1 * 3 + 2] = 1;
    CHECK(hilbert_coefficients(g, 4) == std::vector<BigInt>{1, 3, 2, 1, 0});
}

TEST_CASE("edge list output is sorted and name-resolved") {
    W w = {{1, 0}, {0, 1}};
    auto [gn, gw] = build_graphs(2, w);
    CHECK(emit_edge_list(gw, {"a", "b"}) == "a -> b\nb -> a\n");
}
