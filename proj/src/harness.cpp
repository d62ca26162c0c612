#include "qba/harness.hpp"

#include <sstream>

#include "qba/classify.hpp"
#include "qba/graphs.hpp"
#include "qba/orbits.hpp"
#include "qba/pbw.hpp"

namespace qba {

QuadraticSet example1_set() {
    // Left actions: two double transpositions and a 4-cycle; the fifth
    // generator is fixed by everything.
    std::vector<std::vector<int>> lperm = {
        {0, 3, 2, 1, 4},  // (x2 x4)
        {2, 1, 0, 3, 4},  // (x1 x3)
        {0, 3, 2, 1, 4},  // (x2 x4)
        {2, 1, 0, 3, 4},  // (x1 x3)
        {1, 2, 3, 0, 4},  // (x1 x2 x3 x4)
    };
    return QuadraticSet::from_lmap(5, {"x1", "x2", "x3", "x4", "x5"}, lperm);
}

namespace {

RelationSet four_generator_relations(bool example3) {
    // x=0, y=1, z=2, t=3.
    std::vector<Relation> rels = {
        {0, 1, 2, 3, Rational(1)},                              // xy - zt
        {3, 1, 2, 0, Rational(1)},                              // ty - zx
        {0, 2, 1, example3 ? 3 : 0, Rational(1)},               // xz - yt | xz - yx
        {3, 2, 1, example3 ? 0 : 3, Rational(1)},               // tz - yx | tz - yt
        {0, 3, 3, 0, Rational(1)},                              // xt - tx
        {1, 2, 2, 1, Rational(1)},                              // yz - zy
    };
    return RelationSet(4, {"x", "y", "z", "t"}, std::move(rels));
}

}  // namespace

RelationSet example2_relations() { return four_generator_relations(false); }
RelationSet example3_relations() { return four_generator_relations(true); }

std::map<std::string, bool> theorem1_matrix(const RelationSet& rs, int hilbert_bound) {
    std::map<std::string, bool> m;
    auto orders = pbw_search(rs);
    m["pbw"] = !orders.empty();
    if (orders.empty()) {
        m["1_poly_growth_finite_gldim"] = false;
        m["2_relation_count_finite_gldim"] = false;
        m["3_hilbert_series"] = false;
        m["4_permutation_basis"] = false;
        return m;
    }
    long n = rs.size();
    auto report = check_pbw(rs, orders.front());
    auto [gn, gw] = build_graphs(static_cast<int>(n), report.obstructions);
    auto growth = growth_and_gldim(gn, gw, hilbert_bound);
    bool finite = growth.gldim.has_value();
    m["1_poly_growth_finite_gldim"] = growth.polynomial && finite;
    m["2_relation_count_finite_gldim"] =
        static_cast<long>(rs.relations().size()) == n * (n - 1) / 2 && finite;
    bool hilb = true, perm_basis = true;
    for (int deg = 0; deg <= hilbert_bound; ++deg) {
        if (growth.hilbert[deg] != binomial(n + deg - 1, deg)) hilb = false;
        if (BigInt(normal_words(report, deg).size()) != binomial(n + deg - 1, deg))
            perm_basis = false;
    }
    m["3_hilbert_series"] = hilb;
    m["4_permutation_basis"] = perm_basis;
    bool first = m.at("1_poly_growth_finite_gldim");
    for (const auto& [k, v] : m)
        if (k != "pbw" && v != first)
            throw std::logic_error("theorem1_matrix: conditions disagree at " + k);
    return m;
}

std::map<std::string, bool> theorem2_matrix(const RelationSet& rs) {
    long n = rs.size();
    std::map<std::string, bool> m;
    m["yang_baxter"] = check_R_yangbaxter(rs);
    m["skew_certificate"] = certify_skew_polynomial_ring(rs).has_value();
    m["dim_a3"] = BigInt(dim_A(rs, 3)) == binomial(n + 2, 3);
    bool first = m.begin()->second;
    for (const auto& [k, v] : m)
        if (v != first) throw std::logic_error("theorem2_matrix: conditions disagree at " + k);
    return m;
}

namespace {

struct Checker {
    SuiteResult result;

    void check(bool ok, const std::string& witness) {
        ++result.checked;
        if (!ok) {
            result.passed = false;
            if (result.failures.size() < 50) result.failures.push_back(witness);
        }
    }
};

std::string describe(const QuadraticSet& qs) {
    std::ostringstream os;
    os << "n=" << qs.size() << " rmap=[";
    for (int code : qs.encode()) os << code << " ";
    os << "]";
    return os.str();
}

// Degree-3 orbit profile of a quantum binomial set (the structural facts
// used by the counting formulae).
void check_orbit_profile(Checker& c, const QuadraticSet& qs) {
    int n = qs.size();
    auto census = enumerate_orbits(qs, 3);
    std::string id = describe(qs);
    long diag = 0, type2 = 0, other = 0, total = 0;
    for (const auto& o : census.orbits) {
        total += o.size;
        switch (o.type) {
            case OrbitType::Diagonal:
                ++diag;
                c.check(o.size == 1, id + ": diagonal orbit of size != 1");
                break;
            case OrbitType::TypeII:
                ++type2;
                c.check(o.size >= 3, id + ": type-(ii) orbit smaller than 3");
                break;
            case OrbitType::SquareFree:
                c.check(o.size >= 6, id + ": square-free orbit smaller than 6");
                break;
            default:
                ++other;
        }
    }
    c.check(total == static_cast<long>(std::pow(n, 3) + 0.5), id + ": orbit sizes do not sum to n^3");
    c.check(diag == n, id + ": diagonal orbit count != n");
    c.check(type2 == static_cast<long>(n) * (n - 1), id + ": type-(ii) orbit count != n(n-1)");
    c.check(other == 0, id + ": unexpected orbit type");
    c.check(BigInt(census.q) <= binomial(n, 3), id + ": q exceeds C(n,3)");

    // |E(O)| = 2 for every type-(ii) orbit.
    std::vector<long> e_count(census.orbits.size(), 0);
    for (long code = 0; code < static_cast<long>(census.orbit_of.size()); ++code) {
        auto w = decode_word(code, n, 3);
        bool adj = (w[0] == w[1]) || (w[1] == w[2]);
        bool diag3 = w[0] == w[1] && w[1] == w[2];
        if (adj && !diag3) ++e_count[census.orbit_of[code]];
    }
    for (size_t i = 0; i < census.orbits.size(); ++i)
        if (census.orbits[i].type == OrbitType::TypeII)
            c.check(e_count[i] == 2, id + ": type-(ii) orbit with |E(O)| != 2");
}

void check_quantum_binomial_set(Checker& c, const QuadraticSet& qs, bool with_linear) {
    std::string id = describe(qs);
    c.check(qs.predicates().quantum_binomial, id + ": generator produced a non-qb set");
    check_orbit_profile(c, qs);
    bool sym_orbits = symmetric_via_orbits(qs);
    c.check(sym_orbits == check_braid(qs), id + ": q-criterion disagrees with braid check");
    if (!with_linear) return;
    auto rs = relations_from_set(qs);
    try {
        auto t2 = theorem2_matrix(rs);
        c.check(t2.at("yang_baxter") == sym_orbits,
                id + ": Yang-Baxter check disagrees with orbit criterion");
    } catch (const std::logic_error& e) {
        c.check(false, id + ": " + e.what());
    }
    for (int m = 0; m <= 4; ++m)
        c.check(dim_A(rs, m) == monoid_dimension(qs, m),
                id + ": rank oracle disagrees with orbit oracle at degree " + std::to_string(m));
    long n = qs.size();
    c.check(dim_A_dual(rs, 3) ==
                n * n * n - 2 * n * dim_A(rs, 2) + dim_A(rs, 3),
            id + ": dual degree-3 formula violated");
}

}  // namespace

SuiteResult run_suite(Scope scope, uint64_t seed) {
    Checker c;
    switch (scope) {
        case Scope::Fixtures: {
            auto ex1 = example1_set();
            check_quantum_binomial_set(c, ex1, true);
            c.check(symmetric_via_orbits(ex1), "example 1 not symmetric");
            for (const auto& rs : {example2_relations(), example3_relations()}) {
                c.check(is_quantum_binomial(rs), "fixture not quantum binomial");
                check_quantum_binomial_set(c, rs.derived_r(), true);
                try {
                    theorem3_harness(rs.derived_r());
                } catch (const std::logic_error& e) {
                    c.check(false, e.what());
                }
            }
            c.check(!symmetric_via_orbits(example2_relations().derived_r()),
                    "example 2 unexpectedly symmetric");
            c.check(symmetric_via_orbits(example3_relations().derived_r()),
                    "example 3 not symmetric");
            break;
        }
        case Scope::ExhaustiveN3: {
            for (int n = 1; n <= 3; ++n)
                for (const auto& qs : enumerate_quantum_binomial_raw(n))
                    check_quantum_binomial_set(c, qs, true);
            break;
        }
        case Scope::SampledN5: {
            for (const auto& qs : sample_quantum_binomial(5, 200, seed))
                check_quantum_binomial_set(c, qs, false);
            break;
        }
        case Scope::CensusN4: {
            auto census = enumerate_quantum_binomial(4);
            for (const auto& entry : census.representatives) {
                std::string id = describe(entry.rep);
                check_quantum_binomial_set(c, entry.rep, true);
                auto rs = relations_from_set(entry.rep);
                bool braid = check_braid(entry.rep);
                c.check((BigInt(entry.q) == binomial(4, 3)) == braid,
                        id + ": q = C(n,3) disagrees with braid");
                c.check((BigInt(entry.dim_a3) == binomial(6, 3)) == braid,
                        id + ": dim A_3 = C(n+2,3) disagrees with braid");
                c.check(certify_skew_polynomial_ring(rs).has_value() == braid,
                        id + ": skew certificate disagrees with braid");
            }
            break;
        }
    }
    return c.result;
}

}  // namespace qba
