#include "qba/graphs.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qba {

long QuadGraph::edge_count() const {
    long c = 0;
    for (uint8_t e : adj) c += e;
    return c;
}

std::pair<QuadGraph, QuadGraph> build_graphs(int n, const std::set<std::pair<int, int>>& W) {
    QuadGraph gn{n, GraphKind::Normal, std::vector<uint8_t>(n * n, 1)};
    QuadGraph gw{n, GraphKind::Obstruction, std::vector<uint8_t>(n * n, 0)};
    for (const auto& [a, b] : W) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("build_graphs: monomial out of range");
        gn.adj[a * n + b] = 0;
        gw.adj[a * n + b] = 1;
    }
    return {gn, gw};
}

std::vector<BigInt> hilbert_coefficients(const QuadGraph& gamma_n, int bound) {
    if (bound < 0) throw std::invalid_argument("hilbert_coefficients: negative bound");
    int n = gamma_n.n;
    std::vector<BigInt> out{BigInt(1)};
    if (bound == 0) return out;
    std::vector<BigInt> v(n, BigInt(1));  // paths ending at each vertex
    out.emplace_back(n);
    for (int m = 2; m <= bound; ++m) {
        std::vector<BigInt> next(n, BigInt(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (gamma_n.edge(i, j)) next[j] += v[i];
        v = std::move(next);
        out.push_back(std::accumulate(v.begin(), v.end(), BigInt(0)));
    }
    return out;
}

namespace {

std::vector<std::vector<bool>> reachability(const QuadGraph& g) {
    int n = g.n;
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) reach[i][j] = g.edge(i, j);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    return reach;
}

struct SccInfo {
    std::vector<int> comp_of;             // vertex -> component id
    std::vector<std::vector<int>> comps;  // members
    std::vector<bool> is_cycle;           // component is a single simple cycle (or loop)
};

SccInfo scc_decompose(const QuadGraph& g) {
    int n = g.n;
    auto reach = reachability(g);
    SccInfo info;
    info.comp_of.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (info.comp_of[i] != -1) continue;
        int id = static_cast<int>(info.comps.size());
        info.comps.emplace_back();
        for (int j = 0; j < n; ++j) {
            bool same = (i == j) || (reach[i][j] && reach[j][i]);
            if (same && info.comp_of[j] == -1) {
                info.comp_of[j] = id;
                info.comps[id].push_back(j);
            }
        }
    }
    for (const auto& members : info.comps) {
        if (members.size() == 1) {
            int v = members.front();
            info.is_cycle.push_back(g.edge(v, v));
            continue;
        }
        // A strongly connected set is a single simple cycle iff each member
        // has exactly one in- and one out-edge inside it and no loop.
        bool cycle = true;
        for (int v : members) {
            int out = 0, in = 0;
            for (int w : members) {
                if (g.edge(v, w)) ++out;
                if (g.edge(w, v)) ++in;
            }
            if (out != 1 || in != 1 || g.edge(v, v)) cycle = false;
        }
        info.is_cycle.push_back(cycle);
    }
    return info;
}

// A multi-vertex SCC that is not a simple cycle contains two distinct
// cycles through a shared vertex.
bool no_intersecting_cycles(const SccInfo& info) {
    for (size_t c = 0; c < info.comps.size(); ++c)
        if (info.comps[c].size() > 1 && !info.is_cycle[c]) return false;
    return true;
}

}  // namespace

GrowthReport growth_and_gldim(const QuadGraph& gamma_n, const QuadGraph& gamma_w,
                              int hilbert_bound) {
    GrowthReport report;
    report.hilbert = hilbert_coefficients(gamma_n, hilbert_bound);

    auto scc = scc_decompose(gamma_n);
    report.polynomial = no_intersecting_cycles(scc);
    if (report.polynomial) {
        // Longest chain of cycle components in the condensation.
        int nc = static_cast<int>(scc.comps.size());
        std::vector<std::vector<bool>> cedge(nc, std::vector<bool>(nc, false));
        for (int a = 0; a < gamma_n.n; ++a)
            for (int b = 0; b < gamma_n.n; ++b)
                if (gamma_n.edge(a, b) && scc.comp_of[a] != scc.comp_of[b])
                    cedge[scc.comp_of[a]][scc.comp_of[b]] = true;
        std::vector<int> best(nc, -1);
        auto dfs = [&](auto&& self, int c) -> int {
            if (best[c] != -1) return best[c];
            int m = 0;
            for (int d = 0; d < nc; ++d)
                if (cedge[c][d]) m = std::max(m, self(self, d));
            best[c] = m + (scc.is_cycle[c] ? 1 : 0);
            return best[c];
        };
        int degree = 0;
        for (int c = 0; c < nc; ++c) degree = std::max(degree, dfs(dfs, c));
        report.degree = degree;
    }

    auto wreach = reachability(gamma_w);
    bool acyclic = true;
    for (int i = 0; i < gamma_w.n; ++i)
        if (wreach[i][i]) acyclic = false;
    if (acyclic) {
        // Longest path (edge count) in the obstruction DAG.
        std::vector<int> longest(gamma_w.n, -1);
        auto dfs = [&](auto&& self, int v) -> int {
            if (longest[v] != -1) return longest[v];
            int m = 0;
            for (int w = 0; w < gamma_w.n; ++w)
                if (gamma_w.edge(v, w)) m = std::max(m, self(self, w) + 1);
            longest[v] = m;
            return m;
        };
        int d = 0;
        for (int v = 0; v < gamma_w.n; ++v) d = std::max(d, dfs(dfs, v));
        report.gldim = d + 1;
    }
    return report;
}

bool is_acyclic_tournament(const QuadGraph& gamma_w) {
    int n = gamma_w.n;
    for (int i = 0; i < n; ++i)
        if (gamma_w.edge(i, i)) return false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (gamma_w.edge(i, j) == gamma_w.edge(j, i)) return false;
    auto reach = reachability(gamma_w);
    for (int i = 0; i < n; ++i)
        if (reach[i][i]) return false;
    return true;
}

std::vector<int> tournament_relabel(const QuadGraph& gamma_w) {
    if (!is_acyclic_tournament(gamma_w))
        throw std::invalid_argument("tournament_relabel: not an acyclic tournament");
    int n = gamma_w.n;
    // In the proper labeling y_{k+1} has out-degree k.
    std::vector<int> perm(n, -1);
    for (int v = 0; v < n; ++v) {
        int out = 0;
        for (int w = 0; w < n; ++w)
            if (gamma_w.edge(v, w)) ++out;
        perm[out] = v;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!gamma_w.edge(perm[j], perm[i]))
                throw std::logic_error("tournament_relabel: labeling check failed");
    return perm;
}

MonomialVerdict monomial_algebra_check(int n, const std::set<std::pair<int, int>>& W) {
    auto [gn, gw] = build_graphs(n, W);
    // Path counts of an n-vertex graph obey a linear recurrence of order
    // <= n, so agreement with 1/(1-z)^n on 2n+2 terms decides the series.
    int bound = 2 * n + 2;
    auto growth = growth_and_gldim(gn, gw, bound);
    long half = static_cast<long>(n) * (n - 1) / 2;

    MonomialVerdict v;
    bool finite_gldim = growth.gldim.has_value();
    long wsize = static_cast<long>(W.size());
    bool diag_free = true;
    for (int i = 0; i < n; ++i)
        if (W.count({i, i})) diag_free = false;

    v.conditions[0] = finite_gldim && growth.polynomial;
    v.conditions[1] = finite_gldim && wsize == half;
    v.conditions[2] = growth.polynomial && diag_free && wsize == half;
    v.conditions[3] = is_acyclic_tournament(gw);
    bool hilb = true;
    for (int m = 0; m <= bound; ++m)
        if (growth.hilbert[m] != binomial(n + m - 1, m)) hilb = false;
    v.conditions[4] = hilb;

    // Conditions (6)/(7): existence of a permutation shaping N / W, each by
    // direct search over the n! labelings.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    bool shape_n = false, shape_w = false;
    do {
        bool okn = true, okw = true;
        for (int i = 0; i < n && (okn || okw); ++i)
            for (int j = 0; j < n; ++j) {
                bool upper = i <= j;  // N = {y_i y_j | i <= j}
                if (gn.edge(perm[i], perm[j]) != upper) okn = false;
                bool lower = j < i;  // W = {y_j y_i | i < j}
                if (gw.edge(perm[i], perm[j]) != lower) okw = false;
            }
        shape_n = shape_n || okn;
        shape_w = shape_w || okw;
    } while (!(shape_n && shape_w) && std::next_permutation(perm.begin(), perm.end()));
    v.conditions[5] = shape_n;
    v.conditions[6] = shape_w;

    for (bool c : v.conditions)
        if (c != v.conditions[0])
            throw std::logic_error("monomial_algebra_check: the seven conditions disagree");
    v.value = v.conditions[0];
    return v;
}

std::string emit_edge_list(const QuadGraph& g, const std::vector<std::string>& names) {
    std::ostringstream os;
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            if (g.edge(a, b)) os << names[a] << " -> " << names[b] << "\n";
    return os.str();
}

}  // namespace qba
