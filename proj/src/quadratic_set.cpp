#include "qba/quadratic_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace qba {

std::vector<std::string> default_names(int n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    return names;
}

QuadraticSet::QuadraticSet(int n, std::vector<std::string> names,
                           std::vector<std::pair<int, int>> rmap)
    : n_(n), names_(std::move(names)) {
    if (n <= 0) throw std::invalid_argument("QuadraticSet: n must be positive");
    if (names_.empty()) names_ = default_names(n);
    if (static_cast<int>(names_.size()) != n)
        throw std::invalid_argument("QuadraticSet: name count mismatch");
    if (static_cast<int>(rmap.size()) != n * n)
        throw std::invalid_argument("QuadraticSet: rmap must have n^2 entries");
    rx_.resize(n * n);
    ry_.resize(n * n);
    std::vector<bool> seen(n * n, false);
    for (int i = 0; i < n * n; ++i) {
        auto [a, b] = rmap[i];
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("QuadraticSet: rmap entry out of range");
        int code = a * n + b;
        if (seen[code])
            throw std::invalid_argument("QuadraticSet: rmap is not a bijection");
        seen[code] = true;
        rx_[i] = a;
        ry_[i] = b;
    }
    preds_ = qba::predicates(*this);
}

QuadraticSet QuadraticSet::from_lmap(int n, std::vector<std::string> names,
                                     const std::vector<std::vector<int>>& lperm) {
    if (static_cast<int>(lperm.size()) != n)
        throw std::invalid_argument("from_lmap: need one left action per generator");
    std::vector<std::vector<int>> linv(n, std::vector<int>(n, -1));
    for (int x = 0; x < n; ++x) {
        const auto& p = lperm[x];
        if (static_cast<int>(p.size()) != n)
            throw std::invalid_argument("from_lmap: action has wrong length");
        for (int y = 0; y < n; ++y) {
            if (p[y] < 0 || p[y] >= n || linv[x][p[y]] != -1)
                throw std::invalid_argument("from_lmap: action is not a permutation");
            linv[x][p[y]] = y;
        }
    }
    std::vector<std::pair<int, int>> rmap(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            rmap[x * n + y] = {lperm[x][y], linv[y][x]};
    return QuadraticSet(n, std::move(names), std::move(rmap));
}

QuadraticSet QuadraticSet::relabel(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("relabel: bad permutation size");
    std::vector<std::pair<int, int>> rmap(n_ * n_);
    std::vector<std::string> names(n_);
    for (int x = 0; x < n_; ++x) {
        names[perm[x]] = names_[x];
        for (int y = 0; y < n_; ++y) {
            auto [a, b] = r(x, y);
            rmap[perm[x] * n_ + perm[y]] = {perm[a], perm[b]};
        }
    }
    return QuadraticSet(n_, std::move(names), std::move(rmap));
}

std::vector<int> QuadraticSet::encode() const {
    std::vector<int> out(n_ * n_);
    for (int i = 0; i < n_ * n_; ++i) out[i] = rx_[i] * n_ + ry_[i];
    return out;
}

bool check_involutive(const QuadraticSet& qs) {
    int n = qs.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto [a, b] = qs.r(x, y);
            if (qs.r(a, b) != std::make_pair(x, y)) return false;
        }
    return true;
}

bool check_nondegenerate(const QuadraticSet& qs) {
    int n = qs.size();
    for (int x = 0; x < n; ++x) {
        std::vector<bool> lseen(n, false), rseen(n, false);
        for (int y = 0; y < n; ++y) {
            int l = qs.left(x, y);   // row of L_x
            int r = qs.right(y, x);  // column map R_x: y -> y^x
            if (lseen[l] || rseen[r]) return false;
            lseen[l] = rseen[r] = true;
        }
    }
    return true;
}

bool check_square_free(const QuadraticSet& qs) {
    int n = qs.size();
    for (int x = 0; x < n; ++x)
        if (qs.r(x, x) != std::make_pair(x, x)) return false;
    return true;
}

namespace {

// r applied at positions (i, i+1) of a triple.
inline void apply_r12(const QuadraticSet& qs, int& a, int& b) {
    auto [p, q] = qs.r(a, b);
    a = p;
    b = q;
}

}  // namespace

bool check_braid(const QuadraticSet& qs) {
    int n = qs.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int a1 = x, b1 = y, c1 = z;
                apply_r12(qs, a1, b1);
                apply_r12(qs, b1, c1);
                apply_r12(qs, a1, b1);
                int a2 = x, b2 = y, c2 = z;
                apply_r12(qs, b2, c2);
                apply_r12(qs, a2, b2);
                apply_r12(qs, b2, c2);
                if (a1 != a2 || b1 != b2 || c1 != c2) return false;
            }
    return true;
}

SetPredicates predicates(const QuadraticSet& qs) {
    SetPredicates p;
    p.involutive = check_involutive(qs);
    p.nondegenerate = check_nondegenerate(qs);
    p.square_free = check_square_free(qs);
    p.braided = check_braid(qs);
    p.quantum_binomial = p.nondegenerate && p.involutive && p.square_free;
    p.symmetric = p.braided && p.involutive;
    return p;
}

}  // namespace qba
