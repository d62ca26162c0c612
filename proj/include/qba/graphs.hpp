#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qba/rational.hpp"

namespace qba {

enum class GraphKind { Normal, Obstruction };

// Directed graph on the generators, loops allowed. Plays the role of the
// graph of normal words or the graph of obstructions; the two built from
// the same W are exact complements within X^2.
struct QuadGraph {
    int n = 0;
    GraphKind kind = GraphKind::Normal;
    std::vector<uint8_t> adj;  // n*n, row-major

    bool edge(int a, int b) const { return adj[a * n + b] != 0; }
    long edge_count() const;
};

std::pair<QuadGraph, QuadGraph> build_graphs(int n, const std::set<std::pair<int, int>>& W);

// Entry m = number of paths with m vertices in the normal-word graph
// (m = 0 gives 1, m = 1 gives n); exact big integers.
std::vector<BigInt> hilbert_coefficients(const QuadGraph& gamma_n, int bound);

struct GrowthReport {
    bool polynomial = false;
    std::optional<int> degree;  // max cycles on a path, when polynomial
    std::optional<int> gldim;   // absent = infinite
    std::vector<BigInt> hilbert;
};

// Growth from the normal-word graph (no intersecting cycles; cycle count
// along a path), global dimension from the obstruction graph (longest path
// + 1 when it is an acyclic oriented graph). W = empty yields gldim 1.
GrowthReport growth_and_gldim(const QuadGraph& gamma_n, const QuadGraph& gamma_w,
                              int hilbert_bound = 8);

bool is_acyclic_tournament(const QuadGraph& gamma_w);

// Labeling y_1..y_n with every edge from higher label to lower; returns
// perm with perm[k] = vertex labeled y_{k+1}. Unique for tournaments.
std::vector<int> tournament_relabel(const QuadGraph& gamma_w);

// The seven equivalent conditions on a quadratic monomial algebra, each
// evaluated independently. Disagreement is a theorem violation and throws.
struct MonomialVerdict {
    std::array<bool, 7> conditions{};
    bool value = false;
};

MonomialVerdict monomial_algebra_check(int n, const std::set<std::pair<int, int>>& W);

// Text edge list, one "a -> b" per line, sorted; output-only format.
std::string emit_edge_list(const QuadGraph& g, const std::vector<std::string>& names);

}  // namespace qba
