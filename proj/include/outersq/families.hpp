#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "outersq/graph.hpp"
#include "outersq/outerplanar.hpp"

namespace outersq {

Graph path(int k);   // k >= 2 vertices
Graph cycle(int k);  // k >= 3

// Rigid ladder on n >= 2 vertices. For even n = 2k, u_i = 2(i-1) and v_i = 2(i-1)+1
// with rungs u_i v_i, rails u_i u_{i+1} and v_i v_{i+1}, and diagonals u_i v_{i+1}.
// Odd n removes u_{(n+1)/2} from the ladder on n+1 vertices and renumbers densely.
Graph rigid_ladder(int n);

// Adds one degree-2 vertex across each outer-cycle edge. New vertices are numbered
// from n upward following the outer cycle of the embedding.
Graph hat(const Graph& g, const OuterEmbedding& emb);
Graph hat(const Graph& g);  // embeds first; rejects non-biconnected input

// F4 = hat(K3), F5 = hat(RL4), F6 = hat(hat(K3)).
// F6 numbering: inner triangle 0-2, middle hat 3-5, outer hat 6-11 in cycle order.
Graph f4();
Graph f5();
Graph f6();

enum class FuseOrientation {
    Direct,   // e1.first ~ e2.first, e1.second ~ e2.second
    Crossed,  // e1.first ~ e2.second, e1.second ~ e2.first
};

// Glues g2 onto g1 by identifying edge e2 with e1. Vertices of g1 keep their ids;
// the remaining vertices of g2 follow in increasing order. When `delta_cap` is set,
// a merged vertex whose degree would exceed it is rejected by name.
Graph fuse(const Graph& g1, Edge e1, const Graph& g2, Edge e2,
           FuseOrientation orientation = FuseOrientation::Crossed,
           std::optional<int> delta_cap = std::nullopt);

// Chain of `copies` copies of `base`: each new copy is fused (crossed) along the
// first edge of the current graph and of the copy whose endpoint degrees are
// {low, high}, low-degree end first. Throws InvalidInput when no such edge is left.
Graph fuse_copies(const Graph& base, int copies, int low, int high);

// Exhaustive search for a biconnected outerplanar graph on 10 vertices with max
// degree 5 whose square needs 7 colors. Among all hits the lexicographically
// least canonical chord set is returned, with the outer cycle numbered 0..9.
struct G10Search {
    Graph graph;
    int hits = 0;             // number of non-isomorphic hits
    int chord_sets_tried = 0;
};
G10Search find_g10();

// Reads a cached G10 edge list and checks it against the defining properties.
std::optional<Graph> load_g10(const std::string& path);

// Enumeration. Biconnected mode (n <= 12): one outer n-cycle with a non-crossing
// chord set per isomorphism class. General mode (n <= 9): every outerplanar graph
// on n vertices up to isomorphism. Graphs with max degree above `delta_cap` are
// skipped when a cap is given.
void enumerate_outerplanar(int n, bool biconnected, std::optional<int> delta_cap,
                           const std::function<void(const Graph&)>& visit);
std::vector<Graph> enumerate_outerplanar(int n, bool biconnected,
                                         std::optional<int> delta_cap = std::nullopt);

// Canonical chord set of a dissection of the n-gon under rotation and reflection.
std::vector<Edge> canonical_chords(int n, const std::vector<Edge>& chords);

// Random biconnected outerplanar graph with max degree exactly `delta`: a shuffled
// outer cycle with random non-crossing chords. Deterministic per seed.
Graph random_outerplanar(int n, int delta, std::uint64_t seed);

// Random maximal outerplanar (hence chordal, biconnected) graph with max degree
// exactly `delta`, grown by attaching ears to outer edges.
Graph random_chordal_outerplanar(int n, int delta, std::uint64_t seed);

// Random connected outerplanar graph built as a tree of random blocks
// (edges, cycles, chorded cycles), with max degree exactly `delta`.
Graph random_block_tree(int n, int delta, std::uint64_t seed);

// Random connected chordal outerplanar graph: a tree of edges, triangles and
// random maximal outerplanar blocks, with max degree exactly `delta`.
Graph random_chordal_block_tree(int n, int delta, std::uint64_t seed);

}  // namespace outersq
