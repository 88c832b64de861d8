#pragma once

#include "tnorder/network.hpp"
#include "tnorder/plan.hpp"

#include <span>

namespace tnorder {

// Node subsets are passed as index lists; duplicates are ignored.
using NodeSet = std::span<const NodeIndex>;

// Size of the tensor obtained by contracting S: product of the edge sizes
// crossing (S, V \ S) times the open multipliers inside S.
Cost subset_size(const TensorNetwork& net, NodeSet s);

// Product of the sizes of edges with one endpoint in X and the other in Y.
Cost shared_size(const TensorNetwork& net, NodeSet x, NodeSet y);

// |T_X| * |T_Y| / shared. An outer product (nothing shared) costs |T_X| * |T_Y|.
Cost pair_contraction_cost(const TensorNetwork& net, NodeSet x, NodeSet y);

struct Evaluation {
  Cost cost;
  bool outer_product_free = true;
};

Evaluation evaluate_linear(const TensorNetwork& net, const LinearOrder& order);
Evaluation evaluate_tree(const TensorNetwork& net, const ContractionTree& tree);
Evaluation evaluate_plan(const TensorNetwork& net, const ContractionPlan& plan);

bool check_outer_product_free(const TensorNetwork& net, const ContractionPlan& plan);

}  // namespace tnorder
