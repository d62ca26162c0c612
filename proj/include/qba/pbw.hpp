#pragma once

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "qba/relations.hpp"

namespace qba {

// Deg-lex monomial order induced by an enumeration of X.
// perm[k] = generator sitting at rank k (rank 0 smallest).
struct DegLexOrder {
    std::vector<int> perm;

    std::vector<int> ranks() const {
        std::vector<int> rk(perm.size());
        for (int k = 0; k < static_cast<int>(perm.size()); ++k) rk[perm[k]] = k;
        return rk;
    }
};

// Relation oriented as LM -> coeff * trailing monomial, LM strictly larger.
struct OrientedRel {
    int l1, l2;  // leading monomial
    int r1, r2;  // trailing monomial
    Rational coeff;
};

struct NormalForm {
    Rational scalar;
    std::vector<int> word;

    bool operator==(const NormalForm& o) const = default;
};

struct PbwReport {
    DegLexOrder order;
    std::vector<OrientedRel> oriented;
    std::set<std::pair<int, int>> obstructions;  // W, the leading monomials
    std::vector<std::array<int, 3>> overlaps_checked;
    bool is_pbw = false;
    std::optional<std::array<int, 3>> failing_overlap;
    std::optional<std::pair<NormalForm, NormalForm>> failing_forms;
};

std::vector<OrientedRel> orient_relations(const RelationSet& rs, const DegLexOrder& ord);

// Degree-3 ambiguity resolution: every overlap of two obstructions reduces
// to the same normal form both ways (Bergman's diamond condition for
// quadratic relations).
PbwReport check_pbw(const RelationSet& rs, const DegLexOrder& ord);

inline constexpr int kDefaultFactorialBound = 8;

// All enumerations of X under which the relations form a Groebner basis,
// in lexicographic order of the permutation.
std::vector<DegLexOrder> pbw_search(const RelationSet& rs,
                                    int factorial_bound = kDefaultFactorialBound);

// Conditions (a)-(c) of the skew-polynomial shape under the given order.
bool is_skew_polynomial_type(const RelationSet& rs, const DegLexOrder& ord);

// First order satisfying both the skew-polynomial shape and the diamond
// condition; the binomial skew-polynomial-ring certificate.
std::optional<DegLexOrder> certify_skew_polynomial_ring(
    const RelationSet& rs, int factorial_bound = kDefaultFactorialBound);

// N^(m): length-m words whose adjacent pairs avoid the obstruction set.
std::vector<std::vector<int>> normal_words(const PbwReport& report, int m);

}  // namespace qba
