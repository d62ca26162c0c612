#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qba/quadratic_set.hpp"
#include "qba/relations.hpp"

namespace qba {

// The worked examples, as shipped fixtures.
QuadraticSet example1_set();
RelationSet example2_relations();
RelationSet example3_relations();

// Theorem 1 equivalence matrix for a PBW presentation (evaluated on the
// obstruction set of a passing order).
std::map<std::string, bool> theorem1_matrix(const RelationSet& rs, int hilbert_bound = 8);

// Theorem 2 triangle: Yang-Baxter R, skew certificate, dim A_3.
std::map<std::string, bool> theorem2_matrix(const RelationSet& rs);

enum class Scope { Fixtures, ExhaustiveN3, SampledN5, CensusN4 };

struct SuiteResult {
    bool passed = true;
    long checked = 0;
    std::vector<std::string> failures;  // minimal witnesses
};

// Executes every module-level invariant in the given scope; failures are
// results, not exceptions.
SuiteResult run_suite(Scope scope, uint64_t seed = 0);

}  // namespace qba
