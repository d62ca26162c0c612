#pragma once

#include <vector>

#include "qba/rational.hpp"

namespace qba {

// Sparse row vector: (column index, coefficient) pairs, sorted by index,
// coefficients nonzero.
using SparseVec = std::vector<std::pair<long, Rational>>;

SparseVec sparse_axpy(const SparseVec& a, const Rational& c, const SparseVec& b);

// Rank of the span of the given rows, by exact rational elimination keyed
// on leading column. Rows with few nonzeros stay sparse throughout.
long sparse_rank(const std::vector<SparseVec>& rows);

// Basis of { v : row . v = 0 for every row }, as dense vectors of length ncols.
std::vector<std::vector<Rational>> null_space(long ncols, const std::vector<SparseVec>& rows);

}  // namespace qba
