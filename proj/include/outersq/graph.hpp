#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "outersq/error.hpp"

namespace outersq {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    [[nodiscard]] int n() const { return static_cast<int>(adj_.size()); }
    [[nodiscard]] int edge_count() const { return m_; }
    [[nodiscard]] const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    [[nodiscard]] int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    [[nodiscard]] int max_degree() const;
    [[nodiscard]] int min_degree() const;
    [[nodiscard]] bool has_edge(int u, int v) const;

    // Edges as (u, v) with u < v, in lexicographic order.
    [[nodiscard]] std::vector<Edge> edges() const;

    // Returns false when the edge was already present. Throws on loops or bad ids.
    bool add_edge(int u, int v);
    void remove_edge(int u, int v);

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

// Builds a graph from a pair list, dropping duplicates.
// Rejects self-loops and out-of-range ids, naming the offending pair.
Graph from_edge_list(int n, const std::vector<Edge>& edges);

// Subgraph induced by `vertices`; `to_old[i]` is the original id of new vertex i.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_old;
};
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

struct BlockDecomposition {
    // Sorted vertex sets; an isolated vertex is a trivial block of its own.
    std::vector<std::vector<int>> blocks;
    std::vector<std::vector<Edge>> block_edges;
    std::vector<int> cutvertices;
    std::vector<bool> is_cut;
    // Block-cutvertex incidences (block index, cutvertex).
    std::vector<std::pair<int, int>> block_tree;
    // Indices of blocks containing each vertex.
    std::vector<std::vector<int>> blocks_of;

    [[nodiscard]] int cut_count_in(int block) const;
    [[nodiscard]] bool is_leaf_block(int block) const { return cut_count_in(block) <= 1; }
};

BlockDecomposition blocks(const Graph& g);

// Result of contracting uv: u is removed and v absorbs its neighbors.
struct Contraction {
    Graph graph;
    int merged = -1;            // id of the merged vertex in `graph`
    std::vector<int> to_new;    // old id -> new id (u and v both map to `merged`)
    std::vector<int> to_old;    // new id -> old id (`merged` maps to v)
};

Contraction contract_edge(const Graph& g, int u, int v);

struct SubgraphMatch {
    bool found = false;
    std::vector<int> witness;   // witness[h] = image in G of pattern vertex h
};

// Non-induced subgraph containment of `pattern` in `g` by backtracking.
SubgraphMatch contains_subgraph(const Graph& g, const Graph& pattern);

// Disjoint union; vertices of `b` are shifted by a.n().
Graph disjoint_union(const Graph& a, const Graph& b);

// Relabels vertices: vertex v becomes perm[v].
Graph relabel(const Graph& g, const std::vector<int>& perm);

}  // namespace outersq
