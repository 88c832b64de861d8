#pragma once

#include "tnorder/deadline.hpp"
#include "tnorder/network.hpp"
#include "tnorder/plan.hpp"

#include <cstddef>

namespace tnorder {

// Subsets are bitmasks over node indices in file order.
inline constexpr std::size_t kLinearDpMaxNodes = 30;
inline constexpr std::size_t kGeneralDpMaxNodes = 16;

struct LinearSolution {
  LinearOrder order;
  Cost cost;
};

struct TreeSolution {
  ContractionTree tree;
  Cost cost;
};

// Optimal outer-product-free linear order by DP over subsets:
// best(S) = min over v with S\{v} connected and adjacent to v of
// best(S\{v}) + cost(S\{v}, {v}). Visits every subset mask, so runtime is
// exponential in the node count regardless of shape. Throws SizeBoundError
// above kLinearDpMaxNodes and TimeoutError on deadline.
LinearSolution dp_linear_optimal(const TensorNetwork& net, const Deadline& deadline = {});

// Optimal contraction tree: best(S) = min over S = S1 + S2 with both sides
// connected of best(S1) + best(S2) + cost(S1, S2). Limited to
// kGeneralDpMaxNodes.
TreeSolution dp_general_optimal(const TensorNetwork& net, const Deadline& deadline = {});

// Interval DP over contiguous ranges of `order`: among contraction trees whose
// leaves read `order` left to right, the one with the fewest outer products,
// then the lowest cost. Outer products are costed with shared size 1 and only
// appear when the order admits no bracketing without them.
TreeSolution linearized_dp(const TensorNetwork& net, const LinearOrder& order);

}  // namespace tnorder
