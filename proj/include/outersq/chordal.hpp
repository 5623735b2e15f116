#pragma once

#include <optional>
#include <string>
#include <vector>

#include "outersq/graph.hpp"
#include "outersq/power.hpp"

namespace outersq {

// True iff every bounded face of every block is a triangle. Requires outerplanar input.
bool is_chordal_outerplanar(const Graph& g);

// Generic chordality test: maximum cardinality search followed by a perfect
// elimination check. Works on any graph.
bool is_chordal(const Graph& g);

// Perfect elimination ordering from maximum cardinality search, or nullopt when
// the graph is not chordal.
std::optional<std::vector<int>> perfect_elimination_ordering(const Graph& g);

enum class Trigger { F4Subgraph, F5Subgraph, F6Subgraph, Base };

// F6Subgraph prints as F6_OR_RLn_SUBGRAPH to keep the report vocabulary stable.
std::string to_string(Trigger t);

struct ChordalClassification {
    int delta = 0;
    int predicted_omega = 0;
    int predicted_chi = 0;
    int predicted_ind = 0;
    Trigger trigger = Trigger::Base;
    std::vector<int> trigger_witness;  // image of the triggering pattern, if any
    bool oracle_checked = false;
};

// Square parameters of a chordal outerplanar graph from its max degree and the
// presence of F4 (max degree 4), F5 (max degree 5) or F6 (max degree 6). Hatted
// rigid ladders do not raise the degeneracy: hat(RL_n)^2 has degeneracy 6. With `validate`, graphs on at most
// `validate_limit` vertices are checked against the exact oracles and a mismatch
// throws InternalError naming both triples.
ChordalClassification classify(const Graph& g, bool validate = true, int validate_limit = 24,
                               std::uint64_t budget = kDefaultBudget);

// h vertices inducing a clique in G^2 whose removal disconnects G^2.
struct Separator {
    std::vector<int> vertices;  // sorted
    int h = 0;
    std::string rule;
};

bool separator_is_valid(const Graph& g, const std::vector<int>& vertices);

// Separator of a biconnected chordal outerplanar graph with max degree 5 or 6.
// Returns nullopt when the weak dual has no degree-2 node or G^2 is a clique.
std::optional<Separator> find_separator(const Graph& g);

struct SplitPart {
    InducedSubgraph part;     // G restricted to one side plus the separator
    Graph square;             // G^2 restricted to the same vertices
};

struct Split {
    SplitPart first, second;  // first holds the component of the lowest vertex outside H
    std::vector<int> separator;
};

// Splits G at the separator into two overlapping parts. The part squares are
// taken from G^2 so that the separator stays a clique in both.
Split split_at_separator(const Graph& g, const Separator& sep);

// Combines colorings of the two part squares into a coloring of G^2 by permuting
// the colors of the second part to agree on the separator.
Coloring recombine(const Graph& g, const Split& s, const Coloring& first, const Coloring& second);

}  // namespace outersq
