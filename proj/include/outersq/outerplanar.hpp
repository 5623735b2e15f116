#pragma once

#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "outersq/graph.hpp"

namespace outersq {

// Outer face of a biconnected outerplanar block: Hamiltonian cycle plus chords.
// Blocks with one or two vertices have a degenerate cycle and no chords.
struct OuterEmbedding {
    std::vector<int> outer_cycle;
    std::vector<Edge> chords;  // (min, max), sorted

    [[nodiscard]] bool is_outer_edge(int u, int v) const;
    [[nodiscard]] std::vector<Edge> outer_edges() const;
};

struct OuterplanarityResult {
    bool outerplanar = false;
    // Empty on success, otherwise one of: "edge-count", "reduction-stuck",
    // "cycle-inconsistent", "chord-crossing".
    std::string reason;
    BlockDecomposition decomposition;
    std::vector<OuterEmbedding> embeddings;  // indexed by block, in G's vertex ids
};

OuterplanarityResult is_outerplanar(const Graph& g);

// Embedding of a biconnected outerplanar graph on at least 3 vertices.
// The cycle starts at the smallest vertex and heads toward its smaller cycle neighbor.
// Throws InvalidInput when the degree-2 reduction fails.
OuterEmbedding outer_embedding(const Graph& block);

// Checks the structural invariants of an embedding against its block.
bool embedding_is_valid(const Graph& g, const std::vector<int>& block_vertices,
                        const OuterEmbedding& emb);

struct Face {
    int id = -1;
    std::vector<int> boundary;  // cyclic order
    std::vector<Edge> edges;    // (min, max), in boundary order
    [[nodiscard]] int size() const { return static_cast<int>(boundary.size()); }
    [[nodiscard]] bool contains(int v) const;
};

std::vector<Face> faces(const OuterEmbedding& emb);

// Weak dual of one block: faces as nodes, adjacency through shared chords.
struct DualTree {
    std::vector<Face> faces;
    std::vector<std::vector<int>> adj;
    std::vector<std::pair<int, int>> edges;  // (a, b) with a < b
    std::vector<Edge> shared;                // chord shared by edges[k]
    int root = -1;
    std::vector<int> parent, depth, height;
    std::vector<std::vector<int>> children;

    [[nodiscard]] int size() const { return static_cast<int>(faces.size()); }
    [[nodiscard]] bool empty() const { return faces.empty(); }
    [[nodiscard]] int degree(int node) const { return static_cast<int>(adj[node].size()); }
    [[nodiscard]] bool is_leaf(int node) const { return size() > 1 && degree(node) <= 1; }
    [[nodiscard]] Edge separating_edge(int a, int b) const;
    // Node whose face id equals `face_id`, or -1.
    [[nodiscard]] int node_of(int face_id) const;

    // Fills parent, children, depth and height for the given root.
    void set_root(int r);
};

DualTree dual_tree(const OuterEmbedding& emb);

struct BlockDual {
    int block = -1;
    OuterEmbedding embedding;
    DualTree tree;
};

// One dual tree per block, each rooted by `root_for_block`.
// Throws InvalidInput for non-outerplanar input.
std::vector<BlockDual> weak_dual(const Graph& g);

// Root choice: in a block containing a cutvertex, the lowest-id face holding the
// cutvertex and an outer edge; otherwise a peripheral face (far end of a BFS from face 0).
int root_for_block(const DualTree& t, const OuterEmbedding& emb, std::optional<int> cutvertex);

// Removes every node of degree at most 1; the result of pruning a tree with
// fewer than three nodes is the empty tree. Face ids are kept.
DualTree prune(const DualTree& t);

int diameter(const DualTree& t);
std::vector<int> center(const DualTree& t);

inline constexpr int kAllLevels = INT_MAX;

struct SsLevel {
    int level = -1;        // -1: not a leaf; kAllLevels: i-ss for every i
    int parent = -1;       // node ids in the input tree, -1 when absent
    int grandparent = -1;
};

// Largest i for which `node` is i-strongly simplicial under the tree's rooting.
// Pruning in the rooted sense removes childless non-root nodes.
SsLevel ss_level(const DualTree& t, int node);

}  // namespace outersq
