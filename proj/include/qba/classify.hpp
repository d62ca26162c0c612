#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qba/quadratic_set.hpp"

namespace qba {

struct CensusEntry {
    QuadraticSet rep;
    bool symmetric = false;
    long q = 0;
    std::vector<long> type_ii_sizes;
    std::vector<long> square_free_sizes;
    long dim_a3 = 0;
    int pbw_order_count = 0;
};

struct SolutionCensus {
    int n = 0;
    long total_quantum_binomial = 0;  // labeled sets
    long total_symmetric = 0;         // labeled symmetric sets
    std::vector<CensusEntry> representatives;  // up to isomorphism, canonical order
};

inline constexpr int kClassifyBound = 5;

// All labeled quantum binomial sets on {0..n-1}: backtracking over the
// perfect matching of off-diagonal pairs with incremental Latin-square
// pruning of the action tables.
std::vector<QuadraticSet> enumerate_quantum_binomial_raw(int n);

SolutionCensus enumerate_quantum_binomial(int n);

// Deterministic sample of labeled quantum binomial sets: same backtracking
// with a seeded shuffle of branch order, first `count` hits.
std::vector<QuadraticSet> sample_quantum_binomial(int n, int count, uint64_t seed);

// Lexicographically minimal rmap encoding over all relabelings.
std::vector<int> canonical_encoding(const QuadraticSet& qs);
QuadraticSet canonical_form(const QuadraticSet& qs);

// Theorem 3 equivalence matrix: each evaluable condition computed by its
// own route. Disagreement between conditions throws (theorem violation).
struct Theorem3Matrix {
    std::map<std::string, bool> conditions;
    bool value = false;
    bool as_regular_implied = false;  // (iii), implied by the certificate chain
};

Theorem3Matrix theorem3_harness(const QuadraticSet& qs);

}  // namespace qba
