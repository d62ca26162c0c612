#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qba/linalg.hpp"
#include "qba/quadratic_set.hpp"
#include "qba/rational.hpp"

namespace qba {

// One binomial relation xy - c * y'x' with c != 0.
struct Relation {
    int x, y;    // lhs pair
    int yp, xp;  // rhs pair
    Rational coeff;
};

// Degree-2 relation subspace of V (x) V, given by a basis of sparse vectors
// over the monomial basis {x_a x_b} (index a*n + b).
struct RelationSpace {
    int n = 0;
    std::vector<SparseVec> basis;
};

// A coefficiented quadratic binomial relation set. Construction enforces:
// no xx monomial in any relation, every off-diagonal monomial occurs at
// most once across all lhs/rhs, coefficients nonzero. The derived quadratic
// set and the derived automorphism R on V (x) V extend by fixed points.
class RelationSet {
public:
    RelationSet(int n, std::vector<std::string> names, std::vector<Relation> rels);

    int size() const { return n_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<Relation>& relations() const { return rels_; }

    const QuadraticSet& derived_r() const { return derived_r_; }

    // R(x (x) y) as (coefficient, pair); identity with coefficient 1 on
    // monomials not occurring in any relation.
    std::pair<Rational, std::pair<int, int>> apply_R(int x, int y) const;

    // The relation vectors xy - c*y'x' as a RelationSpace.
    RelationSpace relation_space() const;

private:
    int n_;
    std::vector<std::string> names_;
    std::vector<Relation> rels_;
    QuadraticSet derived_r_;
    std::vector<int> r_index_;  // monomial code -> relation id (+1 lhs / -1-id rhs), 0 = fixed
};

// One coefficient-1 relation per non-fixed unordered r-pair.
RelationSet relations_from_set(const QuadraticSet& qs);

bool is_quantum_binomial(const RelationSet& rs);

// R^12 R^23 R^12 = R^23 R^12 R^23 on every basis tensor of V^(x)3.
bool check_R_yangbaxter(const RelationSet& rs);

inline constexpr long kDefaultDimBound = 1000000;

// dim A_m for the quadratic algebra with the given degree-2 relation space,
// by exact rank of the spanning set { v (x) rho (x) w }.
long quadratic_algebra_dim(const RelationSpace& space, int m,
                           long dim_bound = kDefaultDimBound);

long dim_A(const RelationSet& rs, int m, long dim_bound = kDefaultDimBound);

// Basis of the orthogonal complement of the relation space in (V (x) V)*.
RelationSpace koszul_dual_relations(const RelationSet& rs);

// dim (A!)_m; at m = 3 cross-checked against n^3 - 2n dim A_2 + dim A_3.
long dim_A_dual(const RelationSet& rs, int m, long dim_bound = kDefaultDimBound);

// Dimension profile C(n, i) for 0 <= i <= n and 0 at n+1.
bool is_quantum_grassmann(const RelationSpace& space, long dim_bound = kDefaultDimBound);
bool is_quantum_grassmann(const RelationSet& rs, long dim_bound = kDefaultDimBound);

}  // namespace qba
