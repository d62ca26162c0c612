#include "qba/relations.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qba {

namespace {

QuadraticSet build_derived_r(int n, std::vector<std::string> names,
                             const std::vector<Relation>& rels) {
    std::vector<std::pair<int, int>> rmap(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) rmap[x * n + y] = {x, y};
    for (const auto& rel : rels) {
        for (int g : {rel.x, rel.y, rel.yp, rel.xp})
            if (g < 0 || g >= n)
                throw std::invalid_argument("RelationSet: generator index out of range");
        rmap[rel.x * n + rel.y] = {rel.yp, rel.xp};
        rmap[rel.yp * n + rel.xp] = {rel.x, rel.y};
    }
    return QuadraticSet(n, std::move(names), std::move(rmap));
}

long pow_checked(int n, int m, long bound) {
    long p = 1;
    for (int i = 0; i < m; ++i) {
        if (p > bound / n) throw std::invalid_argument("dimension bound exceeded");
        p *= n;
    }
    return p;
}

}  // namespace

RelationSet::RelationSet(int n, std::vector<std::string> names, std::vector<Relation> rels)
    : n_(n),
      names_(names.empty() ? default_names(n) : std::move(names)),
      rels_(std::move(rels)),
      derived_r_(build_derived_r(n, names_, rels_)) {
    if (static_cast<int>(names_.size()) != n)
        throw std::invalid_argument("RelationSet: name count mismatch");
    r_index_.assign(n * n, 0);
    int id = 0;
    for (const auto& rel : rels_) {
        ++id;
        for (int v : {rel.x, rel.y, rel.yp, rel.xp})
            if (v < 0 || v >= n) throw std::invalid_argument("RelationSet: generator out of range");
        if (rel.coeff == 0) throw std::invalid_argument("RelationSet: zero coefficient");
        if (rel.x == rel.y || rel.yp == rel.xp)
            throw std::invalid_argument("RelationSet: relation contains a square monomial");
        int lhs = rel.x * n + rel.y, rhs = rel.yp * n + rel.xp;
        if (lhs == rhs)
            throw std::invalid_argument("RelationSet: lhs and rhs monomials coincide");
        if (r_index_[lhs] != 0 || r_index_[rhs] != 0)
            throw std::invalid_argument("RelationSet: monomial occurs in more than one relation");
        r_index_[lhs] = id;
        r_index_[rhs] = -id;
    }
}

std::pair<Rational, std::pair<int, int>> RelationSet::apply_R(int x, int y) const {
    int idx = r_index_[x * n_ + y];
    if (idx == 0) return {Rational(1), {x, y}};
    const Relation& rel = rels_[std::abs(idx) - 1];
    if (idx > 0) return {rel.coeff, {rel.yp, rel.xp}};
    return {Rational(1) / rel.coeff, {rel.x, rel.y}};
}

RelationSpace RelationSet::relation_space() const {
    RelationSpace space;
    space.n = n_;
    for (const auto& rel : rels_) {
        long lhs = rel.x * n_ + rel.y, rhs = rel.yp * n_ + rel.xp;
        SparseVec v;
        if (lhs < rhs) {
            v = {{lhs, Rational(1)}, {rhs, -rel.coeff}};
        } else {
            v = {{rhs, -rel.coeff}, {lhs, Rational(1)}};
        }
        space.basis.push_back(std::move(v));
    }
    return space;
}

RelationSet relations_from_set(const QuadraticSet& qs) {
    if (!check_involutive(qs))
        throw std::invalid_argument("relations_from_set: set is not involutive");
    int n = qs.size();
    std::vector<Relation> rels;
    std::vector<bool> done(n * n, false);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (done[x * n + y]) continue;
            auto [yp, xp] = qs.r(x, y);
            if (yp == x && xp == y) continue;  // fixed pair, no relation
            rels.push_back({x, y, yp, xp, Rational(1)});
            done[x * n + y] = done[yp * n + xp] = true;
        }
    return RelationSet(n, qs.names(), std::move(rels));
}

bool is_quantum_binomial(const RelationSet& rs) {
    // Square-freeness and involutivity of the derived set hold by
    // construction; what remains is nondegeneracy plus one relation per
    // unordered pair of distinct generators.
    long n = rs.size();
    return static_cast<long>(rs.relations().size()) == n * (n - 1) / 2 &&
           check_nondegenerate(rs.derived_r());
}

namespace {

struct ScaledTensor {
    Rational scalar;
    int a, b, c;
};

void apply_R12(const RelationSet& rs, ScaledTensor& t) {
    auto [s, p] = rs.apply_R(t.a, t.b);
    t.scalar *= s;
    t.a = p.first;
    t.b = p.second;
}

void apply_R23(const RelationSet& rs, ScaledTensor& t) {
    auto [s, p] = rs.apply_R(t.b, t.c);
    t.scalar *= s;
    t.b = p.first;
    t.c = p.second;
}

}  // namespace

bool check_R_yangbaxter(const RelationSet& rs) {
    int n = rs.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                ScaledTensor lhs{Rational(1), a, b, c};
                apply_R12(rs, lhs);
                apply_R23(rs, lhs);
                apply_R12(rs, lhs);
                ScaledTensor rhs{Rational(1), a, b, c};
                apply_R23(rs, rhs);
                apply_R12(rs, rhs);
                apply_R23(rs, rhs);
                if (lhs.a != rhs.a || lhs.b != rhs.b || lhs.c != rhs.c ||
                    lhs.scalar != rhs.scalar)
                    return false;
            }
    return true;
}

long quadratic_algebra_dim(const RelationSpace& space, int m, long dim_bound) {
    if (m < 0) throw std::invalid_argument("quadratic_algebra_dim: negative degree");
    int n = space.n;
    if (m == 0) return 1;
    if (m == 1) return n;
    long total = pow_checked(n, m, dim_bound);
    std::vector<SparseVec> rows;
    for (int i = 0; i + 2 <= m; ++i) {
        long left_count = 1, right_count = 1;
        for (int k = 0; k < i; ++k) left_count *= n;
        for (int k = 0; k < m - 2 - i; ++k) right_count *= n;
        for (long v = 0; v < left_count; ++v)
            for (long w = 0; w < right_count; ++w)
                for (const auto& rho : space.basis) {
                    SparseVec row;
                    row.reserve(rho.size());
                    for (const auto& [u, cf] : rho)
                        row.emplace_back((v * n * n + u) * right_count + w, cf);
                    rows.push_back(std::move(row));
                }
    }
    return total - sparse_rank(rows);
}

long dim_A(const RelationSet& rs, int m, long dim_bound) {
    return quadratic_algebra_dim(rs.relation_space(), m, dim_bound);
}

RelationSpace koszul_dual_relations(const RelationSet& rs) {
    int n = rs.size();
    auto primal = rs.relation_space();
    auto dense = null_space(static_cast<long>(n) * n, primal.basis);
    RelationSpace dual;
    dual.n = n;
    for (const auto& v : dense) {
        SparseVec sv;
        for (long i = 0; i < static_cast<long>(v.size()); ++i)
            if (v[i] != 0) sv.emplace_back(i, v[i]);
        dual.basis.push_back(std::move(sv));
    }
    return dual;
}

long dim_A_dual(const RelationSet& rs, int m, long dim_bound) {
    long d = quadratic_algebra_dim(koszul_dual_relations(rs), m, dim_bound);
    if (m == 3) {
        long n = rs.size();
        long expect = n * n * n - 2 * n * dim_A(rs, 2, dim_bound) + dim_A(rs, 3, dim_bound);
        if (d != expect)
            throw std::logic_error("dim_A_dual: rank oracle disagrees with the degree-3 formula");
    }
    return d;
}

bool is_quantum_grassmann(const RelationSpace& space, long dim_bound) {
    long n = space.n;
    for (int i = 0; i <= n; ++i)
        if (BigInt(quadratic_algebra_dim(space, i, dim_bound)) != binomial(n, i)) return false;
    return quadratic_algebra_dim(space, static_cast<int>(n) + 1, dim_bound) == 0;
}

bool is_quantum_grassmann(const RelationSet& rs, long dim_bound) {
    return is_quantum_grassmann(rs.relation_space(), dim_bound);
}

}  // namespace qba
