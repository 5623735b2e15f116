#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "outersq/graph.hpp"

namespace outersq {

// Same vertices; uv is an edge iff dist(u, v) is 1 or 2.
Graph square(const Graph& g);

// Vertices at distance 1 or 2 from v, computed from G directly.
std::vector<int> distance2_neighbors(const Graph& g, int v);
int distance2_degree(const Graph& g, int v);

// Vertex sequence u_1..u_n; back_degrees[i] counts neighbors of u_i among u_{i+1}..u_n.
struct InductiveOrdering {
    std::vector<int> order;
    std::vector<int> back_degrees;
    int k = 0;
};

InductiveOrdering make_ordering(const Graph& g, std::vector<int> order);
bool ordering_is_valid(const Graph& g, const InductiveOrdering& ord);

struct Degeneracy {
    int k = 0;
    InductiveOrdering ordering;
};

// Repeated removal of a minimum-degree vertex, lowest id first on ties.
Degeneracy degeneracy(const Graph& g);

// colors[v] >= 1 for colored vertices, 0 for uncolored.
struct Coloring {
    std::vector<int> colors;
    int palette_size = 0;
};

// First-fit in the reverse of ord.order: each vertex takes the smallest color
// not used by an already colored neighbor.
Coloring greedy_color(const Graph& g, const InductiveOrdering& ord);

// greedy_color over the degeneracy ordering.
Coloring simplicial_greedy(const Graph& g);

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct ChromaticResult {
    int chi = 0;
    Coloring witness;
    std::uint64_t nodes = 0;
};

// Exact chromatic number by saturation-ordered branch and bound.
// Throws BudgetExceeded when more than `budget` search nodes are needed.
ChromaticResult exact_chromatic(const Graph& g, std::uint64_t budget = kDefaultBudget);

struct CliqueResult {
    int omega = 0;
    std::vector<int> vertices;
    std::uint64_t nodes = 0;
};

// Exact maximum clique by branch and bound with a greedy-coloring bound.
CliqueResult exact_clique(const Graph& g, std::uint64_t budget = kDefaultBudget);

// Clique number of the square of an outerplanar graph. For max degree at least 6
// the answer is a largest closed neighborhood; below that the exact solver runs
// on the materialized square.
CliqueResult clique_outerplanar_square(const Graph& g, std::uint64_t budget = kDefaultBudget);

enum class ColoringStatus { Valid, Conflict, Uncolored };

struct ColoringCheck {
    ColoringStatus status = ColoringStatus::Valid;
    Edge conflict{-1, -1};  // set for Conflict
    int uncolored = -1;     // set for Uncolored
    [[nodiscard]] bool valid() const { return status == ColoringStatus::Valid; }
};

ColoringCheck validate_coloring(const Graph& g, const Coloring& c);

struct ChoosabilityBounds {
    int lower = 0;  // chromatic number
    int upper = 0;  // degeneracy + 1
    [[nodiscard]] bool certified() const { return lower == upper; }
};

ChoosabilityBounds choosability_bounds(const Graph& g, std::uint64_t budget = kDefaultBudget);

}  // namespace outersq
