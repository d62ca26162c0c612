#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "qba/harness.hpp"
#include "qba/orbits.hpp"

using namespace qba;

namespace {

QuadraticSet flip(int n) {
    std::vector<std::pair<int, int>> rmap(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) rmap[x * n + y] = {y, x};
    return QuadraticSet(n, {}, std::move(rmap));
}

}  // namespace

TEST_CASE("word encoding round-trips") {
    std::vector<int> w = {3, 0, 2, 1};
    CHECK(decode_word(encode_word(w, 4), 4, 4) == w);
    CHECK(encode_word({0, 0, 0}, 5) == 0);
    CHECK(encode_word({1}, 2) == 1);
}

TEST_CASE("example 2 degree-3 census matches the known orbit profile") {
    auto qs = example2_relations().derived_r();
    auto census = enumerate_orbits(qs, 3);
    CHECK(census.orbits.size() == 18);
    CHECK(census.q == 2);
    std::map<std::pair<OrbitType, long>, int> profile;
    long total = 0;
    for (const auto& o : census.orbits) {
        ++profile[{o.type, o.size}];
        total += o.size;
    }
    CHECK(total == 64);
    CHECK(profile[{OrbitType::Diagonal, 1}] == 4);
    CHECK(profile[{OrbitType::TypeII, 3}] == 8);
    CHECK(profile[{OrbitType::TypeII, 6}] == 4);
    CHECK(profile[{OrbitType::SquareFree, 6}] == 2);
    CHECK(census.type_ii_sizes ==
          std::vector<long>{3, 3, 3, 3, 3, 3, 3, 3, 6, 6, 6, 6});
}

TEST_CASE("example 3 meets the q-criterion, example 2 does not") {
    CHECK(symmetric_via_orbits(example3_relations().derived_r()));
    CHECK_FALSE(symmetric_via_orbits(example2_relations().derived_r()));
    CHECK(enumerate_orbits(example3_relations().derived_r(), 3).q == 4);
}

TEST_CASE("q-criterion rejects non quantum binomial input") {
    std::vector<std::pair<int, int>> rmap(4);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) rmap[x * 2 + y] = {1 - y, 1 - x};
    QuadraticSet qs(2, {}, std::move(rmap));  // involutive but not square-free
    CHECK_THROWS_AS(symmetric_via_orbits(qs), std::invalid_argument);
}

TEST_CASE("monoid dimensions") {
    auto ex1 = example1_set();
    CHECK(monoid_dimension(ex1, 0) == 1);
    CHECK(monoid_dimension(ex1, 1) == 5);
    CHECK(monoid_dimension(ex1, 2) == 15);
    CHECK(monoid_dimension(ex1, 3) == 35);
    CHECK(monoid_dimension(example2_relations().derived_r(), 3) == 18);
    auto f = flip(3);
    for (int m = 0; m <= 4; ++m)
        CHECK(BigInt(monoid_dimension(f, m)) == binomial(3 + m - 1, m));
}

TEST_CASE("word problem in the associated monoid") {
    auto qs = example2_relations().derived_r();
    // xy = zt is a defining relation; lengths must match; xt = tx.
    CHECK(words_equal(qs, {0, 1}, {2, 3}));
    CHECK(words_equal(qs, {0, 3}, {3, 0}));
    CHECK_FALSE(words_equal(qs, {0, 1}, {1, 0}));
    CHECK_FALSE(words_equal(qs, {0, 1}, {0, 1, 1}));
    CHECK(words_equal(qs, {0, 1, 2}, {0, 1, 2}));
    // Degree 3: both sides reachable through overlapping rewrites.
    CHECK(words_equal(qs, {0, 1, 2}, {2, 3, 2}));
}

TEST_CASE("degree-2 orbits match dim A_2") {
    auto qs = example3_relations().derived_r();
    auto census = enumerate_orbits(qs, 2);
    CHECK(static_cast<long>(census.orbits.size()) == monoid_dimension(qs, 2));
    CHECK(census.orbits.size() == 10);
}

TEST_CASE("cyclic condition") {
    // All type-(ii) orbits of size 3 for the flip and for example 3.
    CHECK(check_cyclic_condition(flip(4)));
    CHECK(check_cyclic_condition(example3_relations().derived_r()));
    // Example 2 has four type-(ii) orbits of size 6.
    CHECK_FALSE(check_cyclic_condition(example2_relations().derived_r()));
}

TEST_CASE("degree bound guards the enumeration") {
    CHECK_THROWS_AS(enumerate_orbits(example1_set(), 10, 6), std::invalid_argument);
    CHECK_NOTHROW(enumerate_orbits(example1_set(), 4, 6));
}
