#include "qba/linalg.hpp"

#include <map>
#include <stdexcept>

namespace qba {

SparseVec sparse_axpy(const SparseVec& a, const Rational& c, const SparseVec& b) {
    SparseVec out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Rational v = c * b[j].second;
            if (v != 0) out.emplace_back(b[j].first, std::move(v));
            ++j;
        } else {
            Rational v = a[i].second + c * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

long sparse_rank(const std::vector<SparseVec>& rows) {
    std::map<long, SparseVec> pivots;  // leading column -> eliminated row
    for (const auto& r : rows) {
        SparseVec cur = r;
        while (!cur.empty()) {
            auto it = pivots.find(cur.front().first);
            if (it == pivots.end()) break;
            Rational factor = -cur.front().second / it->second.front().second;
            cur = sparse_axpy(cur, factor, it->second);
        }
        if (!cur.empty()) pivots.emplace(cur.front().first, std::move(cur));
    }
    return static_cast<long>(pivots.size());
}

std::vector<std::vector<Rational>> null_space(long ncols, const std::vector<SparseVec>& rows) {
    // Dense Gauss-Jordan; used only on degree-2 spaces (ncols = n^2).
    std::vector<std::vector<Rational>> m;
    for (const auto& r : rows) {
        std::vector<Rational> dense(ncols, Rational(0));
        for (const auto& [c, v] : r) {
            if (c < 0 || c >= ncols) throw std::out_of_range("null_space: column out of range");
            dense[c] += v;
        }
        m.push_back(std::move(dense));
    }
    std::vector<long> pivot_col;
    size_t rank = 0;
    for (long col = 0; col < ncols && rank < m.size(); ++col) {
        size_t sel = rank;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[rank], m[sel]);
        Rational inv = Rational(1) / m[rank][col];
        for (long c = col; c < ncols; ++c) m[rank][c] *= inv;
        for (size_t r2 = 0; r2 < m.size(); ++r2) {
            if (r2 == rank || m[r2][col] == 0) continue;
            Rational f = m[r2][col];
            for (long c = col; c < ncols; ++c) m[r2][c] -= f * m[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(ncols, false);
    for (long c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (long free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(ncols, Rational(0));
        v[free] = 1;
        for (size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace qba
