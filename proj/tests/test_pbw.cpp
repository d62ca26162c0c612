#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "qba/harness.hpp"
#include "qba/pbw.hpp"

using namespace qba;

namespace {

// x = 0, y = 1, z = 2, t = 3; order written largest first.
DegLexOrder order_desc(std::vector<int> desc) {
    DegLexOrder ord;
    ord.perm.assign(desc.rbegin(), desc.rend());
    return ord;
}

}  // namespace

TEST_CASE("example 3 under t > x > z > y is PBW with exactly four overlaps") {
    auto rs = example3_relations();
    auto rep = check_pbw(rs, order_desc({3, 0, 2, 1}));
    CHECK(rep.is_pbw);
    CHECK_FALSE(rep.failing_overlap.has_value());
    std::set<std::pair<int, int>> expected_w = {{0, 1}, {0, 2}, {2, 1},
                                                {3, 0}, {3, 1}, {3, 2}};
    CHECK(rep.obstructions == expected_w);
    std::set<std::array<int, 3>> overlaps(rep.overlaps_checked.begin(),
                                          rep.overlaps_checked.end());
    std::set<std::array<int, 3>> expected_o = {
        {3, 0, 1}, {3, 0, 2}, {0, 2, 1}, {3, 2, 1}};  // txy, txz, xzy, tzy
    CHECK(overlaps == expected_o);
}

TEST_CASE("example 3 search finds the eight block orders") {
    auto rs = example3_relations();
    auto orders = pbw_search(rs);
    CHECK(orders.size() == 8);
    for (const auto& ord : orders) {
        auto rk = ord.ranks();
        // {t, x} and {z, y} occupy adjacent ranks (two unbroken blocks).
        CHECK(std::abs(rk[3] - rk[0]) == 1);
        CHECK(std::abs(rk[2] - rk[1]) == 1);
    }
    // Conversely every block order passes.
    CHECK(check_pbw(rs, order_desc({1, 2, 0, 3})).is_pbw);
}

TEST_CASE("example 2 admits no PBW order and reports a failing overlap") {
    auto rs = example2_relations();
    CHECK(pbw_search(rs).empty());
    auto rep = check_pbw(rs, order_desc({3, 0, 2, 1}));
    CHECK_FALSE(rep.is_pbw);
    REQUIRE(rep.failing_overlap.has_value());
    REQUIRE(rep.failing_forms.has_value());
    CHECK_FALSE(rep.failing_forms->first == rep.failing_forms->second);
}

TEST_CASE("example 1 certificate order") {
    auto rs = relations_from_set(example1_set());
    // y1 = x1, y2 = x3, y3 = x2, y4 = x4, y5 = x5 ascending.
    auto ord = order_desc({4, 3, 1, 2, 0});
    CHECK(check_pbw(rs, ord).is_pbw);
    CHECK(is_skew_polynomial_type(rs, ord));
    auto cert = certify_skew_polynomial_ring(rs);
    REQUIRE(cert.has_value());
    CHECK(check_pbw(rs, *cert).is_pbw);
    CHECK(is_skew_polynomial_type(rs, *cert));
}

TEST_CASE("orientation makes leading monomials strictly larger") {
    auto rs = example3_relations();
    auto ord = order_desc({3, 0, 2, 1});
    auto rk = ord.ranks();
    for (const auto& o : orient_relations(rs, ord)) {
        bool larger = rk[o.l1] > rk[o.r1] || (o.l1 == o.r1 && rk[o.l2] > rk[o.r2]);
        CHECK(larger);
        CHECK(o.coeff != 0);
    }
    // A flipped relation inverts the coefficient.
    RelationSet scaled(2, {}, {{0, 1, 1, 0, Rational(3)}});  // xy = 3 yx
    auto up = orient_relations(scaled, order_desc({1, 0}));  // y > x: lhs yx
    REQUIRE(up.size() == 1);
    CHECK(up[0].l1 == 1);
    CHECK(up[0].coeff == Rational(1, 3));
    auto down = orient_relations(scaled, order_desc({0, 1}));
    CHECK(down[0].l1 == 0);
    CHECK(down[0].coeff == 3);
}

TEST_CASE("quantum plane is PBW both ways") {
    RelationSet rs(2, {}, {{0, 1, 1, 0, Rational(2)}});
    for (auto desc : {std::vector<int>{0, 1}, std::vector<int>{1, 0}}) {
        auto rep = check_pbw(rs, order_desc(desc));
        CHECK(rep.is_pbw);
        CHECK(rep.obstructions.size() == 1);
        for (int m = 0; m <= 5; ++m)
            CHECK(static_cast<int>(normal_words(rep, m).size()) == m + 1);
    }
    CHECK(pbw_search(rs).size() == 2);
    CHECK(certify_skew_polynomial_ring(rs).has_value());
}

TEST_CASE("free algebra has no obstructions and all words normal") {
    RelationSet rs(3, {}, {});
    auto rep = check_pbw(rs, order_desc({2, 1, 0}));
    CHECK(rep.is_pbw);
    CHECK(rep.obstructions.empty());
    CHECK(rep.overlaps_checked.empty());
    CHECK(normal_words(rep, 3).size() == 27);
}

TEST_CASE("normal words count the Hilbert function of example 3") {
    auto rs = example3_relations();
    auto rep = check_pbw(rs, order_desc({3, 0, 2, 1}));
    for (int m = 0; m <= 5; ++m)
        CHECK(BigInt(normal_words(rep, m).size()) == binomial(3 + m, 3));
    // Normal words are exactly those avoiding obstruction pairs.
    for (const auto& w : normal_words(rep, 3))
        for (size_t i = 0; i + 1 < w.size(); ++i)
            CHECK(rep.obstructions.count({w[i], w[i + 1]}) == 0);
}

TEST_CASE("orders breaking the blocks fail both checks") {
    auto rs = example3_relations();
    // t > z > x > y interleaves {t,x} and {z,y}: the relation xy = zt then
    // leads with zt, violating the skew shape, and the diamond check fails.
    auto ord = order_desc({3, 2, 0, 1});
    CHECK_FALSE(check_pbw(rs, ord).is_pbw);
    CHECK_FALSE(is_skew_polynomial_type(rs, ord));
}

TEST_CASE("factorial bound guards the search") {
    auto rs = relations_from_set(example1_set());
    CHECK_THROWS_AS(pbw_search(rs, 4), std::invalid_argument);
    CHECK_NOTHROW(pbw_search(rs, 5));
}
