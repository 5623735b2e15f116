#pragma once

#include <optional>
#include <string>
#include <vector>

#include "outersq/graph.hpp"
#include "outersq/outerplanar.hpp"
#include "outersq/power.hpp"

namespace outersq {

// A vertex of degree at most 2 whose distance-2 degree is at most k.
struct KVertexWitness {
    int vertex = -1;
    int degree = 0;
    int dist2_degree = 0;
    int k = 0;
};

// Checks the witness literally against g.
bool witness_holds(const Graph& g, const KVertexWitness& w);

enum class Config { A, B, C, D, E, F, G, H, I, J, SimpleBlock };

std::string to_string(Config c);

// Bound guaranteed by each configuration: A 4, B 5, C 6, D D+1, E 7, F 7, G 6,
// H D+1, I D, J 7. A simple leaf block guarantees D+1 at D = 5 and D above that.
int promised_k(Config c, int delta);

struct ConfigurationLabel {
    Config label = Config::SimpleBlock;
    int face = -1;         // face id holding the witness (or the parent face for F and G)
    int parent_face = -1;  // face id of the parent, -1 for simple blocks
    int promised_k = 0;
    KVertexWitness witness;
    std::string rule;      // the case of the argument that produced the witness
};

// Lowest-id vertex with degree <= 2 and distance-2 degree <= k.
std::optional<KVertexWitness> find_k_vertex(const Graph& g, int k);

// A leaf block of g with its rooted dual and cutvertex (if any).
struct LeafBlock {
    int block = -1;
    std::optional<int> cutvertex;
    BlockDual dual;
};

// Leaf blocks with at least one edge, in block order.
std::vector<LeafBlock> leaf_blocks(const Graph& g);

bool is_simple_block(const DualTree& t);

struct GoodFace {
    bool simple = false;   // the block is simple; use simple_leaf_block_vertex instead
    int f = -1, parent = -1, grandparent = -1;  // nodes of the dual tree
    std::optional<Edge> separator;  // separates the grandparent side from the rest
    Edge ab{-1, -1};                // chord between parent and grandparent
};

// Deepest face under the block's rooting with its parent, grandparent and a
// separating edge.
GoodFace good_face(const Graph& g, const LeafBlock& lb);

// k-vertex inside a simple leaf block. Requires max degree >= 5.
ConfigurationLabel simple_leaf_block_vertex(const Graph& g, const LeafBlock& lb, int delta);

// Flowchart for max degree >= 5 over labels A, B, C, D, H.
ConfigurationLabel classify_delta5(const Graph& g, const LeafBlock& lb, const GoodFace& gf);

// Flowchart for max degree >= 7 over labels A, B, C, E, F, G, I, J.
ConfigurationLabel classify_delta7(const Graph& g, const LeafBlock& lb, const GoodFace& gf);

// Direct leaf-face scan used when max degree <= 4.
ConfigurationLabel low_degree_vertex(const Graph& g);

// Target degeneracy bound for the square, from the table by max degree and chordality.
int target_inductiveness(int delta, bool chordal);

struct ReductionStep {
    int vertex = -1;          // original id of the removed vertex
    int merged_into = -1;     // original id of the neighbor it was contracted into, -1 if deleted
    int delta = 0;            // max degree of the current graph
    std::optional<Config> label;
    std::string rule;
    int dist2_degree = 0;
    int promised_k = 0;
};

struct ReductionResult {
    InductiveOrdering ordering;  // ordering of the square of the input graph
    int target_k = 0;
    bool chordal = false;
    std::vector<ReductionStep> trace;
};

struct ReductionOptions {
    // Also runs classify_delta5 on steps handled by classify_delta7 and checks its witness.
    bool cross_check = false;
};

// Builds an ordering of g^2 by repeatedly removing a k-vertex and contracting it
// into its lowest-id neighbor. Rejects non-outerplanar input.
ReductionResult inductive_ordering_square(const Graph& g, ReductionOptions opts = {});

}  // namespace outersq
