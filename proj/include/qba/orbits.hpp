#pragma once

#include <vector>

#include "qba/quadratic_set.hpp"

namespace qba {

// Orbits of the group generated by r applied at adjacent positions of X^m.
// Degree-3 orbits are classified by which diagonal strata they meet.

enum class OrbitType { Diagonal, TypeII, SquareFree, Other };

struct OrbitInfo {
    long size = 0;
    long representative = 0;  // smallest base-n encoding in the orbit
    OrbitType type = OrbitType::Other;
};

struct OrbitCensus {
    int n = 0;
    int m = 0;
    std::vector<int> orbit_of;      // X^m (base-n encoded) -> orbit id
    std::vector<OrbitInfo> orbits;  // ordered by representative
    long q = 0;                     // number of square-free orbits (m == 3)
    std::vector<long> type_ii_sizes;  // m == 3 only, sorted
};

inline constexpr int kDefaultDegreeBound = 6;

OrbitCensus enumerate_orbits(const QuadraticSet& qs, int m,
                             int degree_bound = kDefaultDegreeBound);

// Word problem in the associated monoid: equal length and same orbit.
bool words_equal(const QuadraticSet& qs, const std::vector<int>& w1,
                 const std::vector<int>& w2);

// Number of distinct length-m monomials in the associated monoid.
long monoid_dimension(const QuadraticSet& qs, int m,
                      int degree_bound = kDefaultDegreeBound);

// Symmetric-set criterion via the square-free orbit count q = C(n, 3).
bool symmetric_via_orbits(const QuadraticSet& qs);

// Cyclic condition: every type-(ii) degree-3 orbit has size exactly 3.
bool check_cyclic_condition(const QuadraticSet& qs);

long encode_word(const std::vector<int>& w, int n);
std::vector<int> decode_word(long code, int n, int m);

}  // namespace qba
