#include "qba/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "qba/graphs.hpp"
#include "qba/orbits.hpp"
#include "qba/pbw.hpp"
#include "qba/relations.hpp"

namespace qba {

namespace {

// Backtracking over the involution on off-diagonal pairs. Nondegeneracy of
// a square-free involutive set forbids fixed off-diagonal pairs, so the
// search is over perfect matchings {p <-> q} with Latin-square pruning on
// the left/right action tables.
struct Search {
    int n;
    std::vector<std::pair<int, int>> pairs;      // off-diagonal, lex order
    std::vector<int> image;                      // pair index -> matched pair index, -1 open
    std::vector<unsigned> used_l, used_r;        // value bitmasks per generator
    std::vector<QuadraticSet> out;
    int limit = -1;                              // stop after this many solutions
    std::mt19937_64* rng = nullptr;              // when set, shuffle branch order

    explicit Search(int n_) : n(n_) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (x != y) pairs.emplace_back(x, y);
        image.assign(pairs.size(), -1);
        used_l.assign(n, 0);
        used_r.assign(n, 0);
        for (int x = 0; x < n; ++x) {
            used_l[x] |= 1u << x;  // ^xx = x
            used_r[x] |= 1u << x;  // x^x = x
        }
    }

    bool feasible(int p, int q) const {
        auto [x, y] = pairs[p];
        auto [u, v] = pairs[q];
        // r(x,y) = (u,v): ^xy = u, x^y = v;  r(u,v) = (x,y): ^uv = x, u^v = y.
        if (used_l[x] & (1u << u)) return false;
        if (used_r[y] & (1u << v)) return false;
        if (used_l[u] & (1u << x)) return false;
        if (used_r[v] & (1u << y)) return false;
        return true;
    }

    void assign(int p, int q, bool on) {
        auto [x, y] = pairs[p];
        auto [u, v] = pairs[q];
        unsigned lu = 1u << u, rv = 1u << v, lx = 1u << x, ry = 1u << y;
        if (on) {
            image[p] = q;
            image[q] = p;
            used_l[x] |= lu;
            used_r[y] |= rv;
            used_l[u] |= lx;
            used_r[v] |= ry;
        } else {
            image[p] = image[q] = -1;
            used_l[x] &= ~lu;
            used_r[y] &= ~rv;
            used_l[u] &= ~lx;
            used_r[v] &= ~ry;
        }
    }

    void emit() {
        std::vector<std::pair<int, int>> rmap(n * n);
        for (int x = 0; x < n; ++x) rmap[x * n + x] = {x, x};
        for (size_t p = 0; p < pairs.size(); ++p) {
            auto [x, y] = pairs[p];
            rmap[x * n + y] = pairs[image[p]];
        }
        out.emplace_back(n, std::vector<std::string>{}, std::move(rmap));
    }

    bool done() const { return limit >= 0 && static_cast<int>(out.size()) >= limit; }

    void run(size_t from) {
        if (done()) return;
        size_t p = from;
        while (p < pairs.size() && image[p] != -1) ++p;
        if (p == pairs.size()) {
            emit();
            return;
        }
        std::vector<int> candidates;
        for (size_t q = p + 1; q < pairs.size(); ++q)
            if (image[q] == -1 && feasible(static_cast<int>(p), static_cast<int>(q)))
                candidates.push_back(static_cast<int>(q));
        if (rng) std::shuffle(candidates.begin(), candidates.end(), *rng);
        for (int q : candidates) {
            assign(static_cast<int>(p), q, true);
            run(p + 1);
            assign(static_cast<int>(p), q, false);
            if (done()) return;
        }
    }
};

}  // namespace

std::vector<QuadraticSet> enumerate_quantum_binomial_raw(int n) {
    if (n < 1 || n > kClassifyBound)
        throw std::invalid_argument("enumerate_quantum_binomial: n out of bounds");
    Search s(n);
    s.run(0);
    return std::move(s.out);
}

std::vector<QuadraticSet> sample_quantum_binomial(int n, int count, uint64_t seed) {
    if (n < 1 || n > kClassifyBound)
        throw std::invalid_argument("sample_quantum_binomial: n out of bounds");
    std::mt19937_64 rng(seed);
    Search s(n);
    s.limit = count;
    s.rng = &rng;
    s.run(0);
    return std::move(s.out);
}

std::vector<int> canonical_encoding(const QuadraticSet& qs) {
    int n = qs.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    do {
        auto enc = qs.relabel(perm).encode();
        if (best.empty() || enc < best) best = std::move(enc);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

QuadraticSet canonical_form(const QuadraticSet& qs) {
    int n = qs.size();
    auto enc = canonical_encoding(qs);
    std::vector<std::pair<int, int>> rmap(n * n);
    for (int i = 0; i < n * n; ++i) rmap[i] = {enc[i] / n, enc[i] % n};
    return QuadraticSet(n, {}, std::move(rmap));
}

SolutionCensus enumerate_quantum_binomial(int n) {
    auto all = enumerate_quantum_binomial_raw(n);
    SolutionCensus census;
    census.n = n;
    census.total_quantum_binomial = static_cast<long>(all.size());
    std::map<std::vector<int>, long> classes;  // canonical encoding -> count
    for (const auto& qs : all) {
        if (qs.predicates().symmetric) ++census.total_symmetric;
        ++classes[canonical_encoding(qs)];
    }
    for (const auto& [enc, count] : classes) {
        std::vector<std::pair<int, int>> rmap(n * n);
        for (int i = 0; i < n * n; ++i) rmap[i] = {enc[i] / n, enc[i] % n};
        CensusEntry entry{QuadraticSet(n, {}, std::move(rmap))};
        auto oc = enumerate_orbits(entry.rep, 3);
        entry.q = oc.q;
        entry.type_ii_sizes = oc.type_ii_sizes;
        for (const auto& o : oc.orbits)
            if (o.type == OrbitType::SquareFree) entry.square_free_sizes.push_back(o.size);
        std::sort(entry.square_free_sizes.begin(), entry.square_free_sizes.end());
        entry.symmetric = entry.rep.predicates().symmetric;
        auto rs = relations_from_set(entry.rep);
        entry.dim_a3 = dim_A(rs, 3);
        entry.pbw_order_count = static_cast<int>(pbw_search(rs).size());
        census.representatives.push_back(std::move(entry));
    }
    return census;
}

Theorem3Matrix theorem3_harness(const QuadraticSet& qs) {
    if (!qs.predicates().quantum_binomial)
        throw std::invalid_argument("theorem3_harness: set is not quantum binomial");
    long n = qs.size();
    auto rs = relations_from_set(qs);

    Theorem3Matrix m;
    auto orders = pbw_search(rs);
    bool pbw = !orders.empty();
    bool finite_gldim = false, poly_growth = false;
    if (pbw) {
        auto report = check_pbw(rs, orders.front());
        auto [gn, gw] = build_graphs(static_cast<int>(n), report.obstructions);
        auto growth = growth_and_gldim(gn, gw);
        finite_gldim = growth.gldim.has_value();
        poly_growth = growth.polynomial;
    }
    m.conditions["i_pbw_finite_gldim"] = pbw && finite_gldim;
    m.conditions["ii_pbw_poly_growth"] = pbw && poly_growth;
    m.conditions["iv_yang_baxter"] = check_R_yangbaxter(rs);
    m.conditions["v_skew_certificate"] = certify_skew_polynomial_ring(rs).has_value();
    m.conditions["vi_dim_a3"] = BigInt(dim_A(rs, 3)) == binomial(n + 2, 3) &&
                                BigInt(dim_A_dual(rs, 3)) == binomial(n, 3);
    bool hilb = true;
    for (int deg = 0; deg <= 4; ++deg)
        if (BigInt(dim_A(rs, deg)) != binomial(n + deg - 1, deg)) hilb = false;
    m.conditions["vii_hilbert"] = hilb;
    m.conditions["viii_dual_grassmann"] = is_quantum_grassmann(koszul_dual_relations(rs));

    bool first = m.conditions.begin()->second;
    for (const auto& [name, v] : m.conditions)
        if (v != first)
            throw std::logic_error("theorem3_harness: equivalence matrix disagrees at " + name);
    m.value = first;
    m.as_regular_implied = first;
    return m;
}

}  // namespace qba
