#pragma once

#include "tnorder/iks.hpp"
#include "tnorder/network.hpp"

namespace tnorder {

// Spanning tree maximizing the product of kept edge sizes (Kruskal on sizes,
// ties by the lexicographic (id, id) key of the edge). Dropped edges are
// folded into both endpoints' open multipliers so every tensor keeps its
// true size. Trees are returned unchanged.
TensorNetwork max_spanning_tree(const TensorNetwork& net);

struct ArbitrarySolution {
  LinearOrder order;
  Cost cost;           // evaluated on the original network
  Cost tree_estimate;  // cost of the same order on the spanning tree
};

// IKS on the maximum spanning tree; the order is then costed on `net`.
ArbitrarySolution order_arbitrary(const TensorNetwork& net, const IksOptions& options = {});

}  // namespace tnorder
