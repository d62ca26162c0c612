#include "qba/orbits.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>

#include "qba/rational.hpp"

namespace qba {

long encode_word(const std::vector<int>& w, int n) {
    long code = 0;
    for (int c : w) code = code * n + c;
    return code;
}

std::vector<int> decode_word(long code, int n, int m) {
    std::vector<int> w(m);
    for (int i = m - 1; i >= 0; --i) {
        w[i] = static_cast<int>(code % n);
        code /= n;
    }
    return w;
}

namespace {

long pow_long(int n, int m) {
    long p = 1;
    for (int i = 0; i < m; ++i) {
        if (p > 100000000L) throw std::invalid_argument("degree bound exceeded: n^m too large");
        p *= n;
    }
    return p;
}

// Apply r at positions (pos, pos+1) of a base-n encoded word of length m.
long apply_generator(const QuadraticSet& qs, long code, int n, int m, int pos) {
    // Letter at position i has weight n^(m-1-i).
    long wb = 1;
    for (int i = 0; i < m - 2 - pos; ++i) wb *= n;
    long wa = wb * n;
    int b = static_cast<int>((code / wb) % n);
    int a = static_cast<int>((code / wa) % n);
    auto [a2, b2] = qs.r(a, b);
    return code + (a2 - a) * wa + (b2 - b) * wb;
}

bool meets_diag3(long code, int n) {
    auto w = decode_word(code, n, 3);
    return w[0] == w[1] && w[1] == w[2];
}

bool meets_e_set(long code, int n) {
    auto w = decode_word(code, n, 3);
    bool adj = (w[0] == w[1]) || (w[1] == w[2]);
    return adj && !(w[0] == w[1] && w[1] == w[2]);
}

}  // namespace

OrbitCensus enumerate_orbits(const QuadraticSet& qs, int m, int degree_bound) {
    if (m < 2 || m > degree_bound)
        throw std::invalid_argument("enumerate_orbits: degree out of bounds");
    int n = qs.size();
    long total = pow_long(n, m);
    OrbitCensus census;
    census.n = n;
    census.m = m;
    census.orbit_of.assign(total, -1);
    for (long start = 0; start < total; ++start) {
        if (census.orbit_of[start] != -1) continue;
        int id = static_cast<int>(census.orbits.size());
        OrbitInfo info;
        info.representative = start;
        bool diag = false, eset = false;
        std::deque<long> frontier{start};
        census.orbit_of[start] = id;
        while (!frontier.empty()) {
            long cur = frontier.front();
            frontier.pop_front();
            ++info.size;
            if (m == 3) {
                diag = diag || meets_diag3(cur, n);
                eset = eset || meets_e_set(cur, n);
            }
            for (int pos = 0; pos < m - 1; ++pos) {
                long next = apply_generator(qs, cur, n, m, pos);
                if (census.orbit_of[next] == -1) {
                    census.orbit_of[next] = id;
                    frontier.push_back(next);
                }
            }
        }
        if (m == 3)
            info.type = diag   ? OrbitType::Diagonal
                        : eset ? OrbitType::TypeII
                               : OrbitType::SquareFree;
        census.orbits.push_back(info);
    }
    if (m == 3) {
        for (const auto& o : census.orbits) {
            if (o.type == OrbitType::SquareFree) ++census.q;
            if (o.type == OrbitType::TypeII) census.type_ii_sizes.push_back(o.size);
        }
        std::sort(census.type_ii_sizes.begin(), census.type_ii_sizes.end());
    }
    return census;
}

bool words_equal(const QuadraticSet& qs, const std::vector<int>& w1,
                 const std::vector<int>& w2) {
    if (w1.size() != w2.size()) return false;
    int m = static_cast<int>(w1.size());
    int n = qs.size();
    if (m == 0) return true;
    long a = encode_word(w1, n), b = encode_word(w2, n);
    if (a == b) return true;
    if (m == 1) return false;
    // BFS from w1 until w2 is found or the orbit is exhausted.
    std::deque<long> frontier{a};
    std::vector<uint8_t> visited;  // lazy: only allocate on demand for large m
    visited.assign(pow_long(n, m), 0);
    visited[a] = 1;
    while (!frontier.empty()) {
        long cur = frontier.front();
        frontier.pop_front();
        for (int pos = 0; pos < m - 1; ++pos) {
            long next = apply_generator(qs, cur, n, m, pos);
            if (next == b) return true;
            if (!visited[next]) {
                visited[next] = 1;
                frontier.push_back(next);
            }
        }
    }
    return false;
}

long monoid_dimension(const QuadraticSet& qs, int m, int degree_bound) {
    if (m < 0 || m > degree_bound)
        throw std::invalid_argument("monoid_dimension: degree out of bounds");
    if (m == 0) return 1;
    if (m == 1) return qs.size();
    return static_cast<long>(enumerate_orbits(qs, m, degree_bound).orbits.size());
}

bool symmetric_via_orbits(const QuadraticSet& qs) {
    if (!qs.predicates().quantum_binomial)
        throw std::invalid_argument("symmetric_via_orbits: set is not quantum binomial");
    auto census = enumerate_orbits(qs, 3);
    long n = qs.size();
    bool by_count = BigInt(census.q) == binomial(n, 3);
    bool by_sizes = true;
    for (const auto& o : census.orbits) {
        if (o.type == OrbitType::TypeII && o.size != 3) by_sizes = false;
        if (o.type == OrbitType::SquareFree && o.size != 6) by_sizes = false;
    }
    if (by_count != by_sizes)
        throw std::logic_error("symmetric_via_orbits: orbit-count and orbit-size criteria disagree");
    return by_count;
}

bool check_cyclic_condition(const QuadraticSet& qs) {
    if (!qs.predicates().quantum_binomial)
        throw std::invalid_argument("check_cyclic_condition: set is not quantum binomial");
    auto census = enumerate_orbits(qs, 3);
    bool by_orbits = true;
    for (const auto& o : census.orbits)
        if (o.type == OrbitType::TypeII && o.size != 3) by_orbits = false;
    // Pointwise identities ^(x^y)y = ^xy and x^(^xy) = x^y for x != y.
    bool pointwise = true;
    int n = qs.size();
    for (int x = 0; x < n && pointwise; ++x)
        for (int y = 0; y < n && pointwise; ++y) {
            if (x == y) continue;
            int ly = qs.left(x, y), rx = qs.right(x, y);
            if (qs.left(rx, y) != ly || qs.right(x, ly) != rx) pointwise = false;
        }
    if (by_orbits != pointwise)
        throw std::logic_error("check_cyclic_condition: orbit and pointwise criteria disagree");
    return by_orbits;
}

}  // namespace qba
