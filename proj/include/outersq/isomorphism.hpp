#pragma once

#include <cstdint>
#include <vector>

#include "outersq/graph.hpp"

namespace outersq {

// Stable vertex colors from iterated neighborhood refinement. The values are
// comparable across graphs: isomorphic graphs get equal color multisets.
std::vector<std::uint64_t> refined_colors(const Graph& g);

// Isomorphism-invariant hash built from the refined colors.
std::uint64_t invariant_hash(const Graph& g);

// Backtracking isomorphism test restricted by refined colors.
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace outersq
