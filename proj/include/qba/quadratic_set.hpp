#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qba {

struct SetPredicates {
    bool involutive = false;
    bool nondegenerate = false;
    bool square_free = false;
    bool braided = false;
    bool quantum_binomial = false;  // nondegenerate && involutive && square_free
    bool symmetric = false;         // braided && involutive
};

// A finite quadratic set (X, r): X = {0, .., n-1}, r a bijection of X x X
// stored as a flat table. The left/right action tables are derived caches;
// the table itself is the source of truth. Immutable after construction.
class QuadraticSet {
public:
    QuadraticSet(int n, std::vector<std::string> names,
                 std::vector<std::pair<int, int>> rmap);

    // r(x, y) = (L_x(y), L_y^{-1}(x)) from left-action permutations.
    static QuadraticSet from_lmap(int n, std::vector<std::string> names,
                                  const std::vector<std::vector<int>>& lperm);

    int size() const { return n_; }
    const std::vector<std::string>& names() const { return names_; }

    std::pair<int, int> r(int x, int y) const {
        int i = x * n_ + y;
        return {rx_[i], ry_[i]};
    }
    int left(int x, int y) const { return rx_[x * n_ + y]; }    // ^xy
    int right(int x, int y) const { return ry_[x * n_ + y]; }   // x^y

    const SetPredicates& predicates() const { return preds_; }

    // Conjugate r by a relabeling permutation of X (names follow).
    QuadraticSet relabel(const std::vector<int>& perm) const;

    // Flat rmap encoding, row-major over (x, y); used for canonical forms.
    std::vector<int> encode() const;

    bool operator==(const QuadraticSet& o) const {
        return n_ == o.n_ && rx_ == o.rx_ && ry_ == o.ry_;
    }

private:
    int n_;
    std::vector<std::string> names_;
    std::vector<int> rx_, ry_;
    SetPredicates preds_;
};

bool check_involutive(const QuadraticSet& qs);
bool check_nondegenerate(const QuadraticSet& qs);
bool check_square_free(const QuadraticSet& qs);
bool check_braid(const QuadraticSet& qs);
SetPredicates predicates(const QuadraticSet& qs);

std::vector<std::string> default_names(int n);

}  // namespace qba
