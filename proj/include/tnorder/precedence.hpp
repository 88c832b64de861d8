#pragma once

#include "tnorder/network.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tnorder {

// Per-node ingredients of the rank calculus under a fixed rooting.
struct NodeQuantities {
  Cost parent_edge;     // w: size of the leg to the parent; 1 at the root
  Cost tensor_size;     // F: open_mult times all incident leg sizes
  Rational growth;      // t = F / w^2: factor by which the prefix tensor grows
  Rational step_cost;   // c = F / w: step cost per unit of prefix size
};

// A tree network rooted at one tensor. The root must be contracted first and
// every other tensor after its parent.
class PrecedenceGraph {
 public:
  NodeIndex root() const { return root_; }
  std::size_t size() const { return parent_.size(); }

  std::optional<NodeIndex> parent(NodeIndex v) const;
  const std::vector<NodeIndex>& children(NodeIndex v) const { return children_.at(v); }
  // Throws ValidationError for an unknown node.
  const NodeQuantities& quantities(NodeIndex v) const;
  // Depth-first order from the root; parents precede children.
  const std::vector<NodeIndex>& preorder() const { return preorder_; }

 private:
  friend PrecedenceGraph build_precedence_graph(const TensorNetwork& net, NodeIndex root);

  NodeIndex root_ = 0;
  std::vector<NodeIndex> parent_;
  std::vector<std::vector<NodeIndex>> children_;
  std::vector<NodeQuantities> quantities_;
  std::vector<NodeIndex> preorder_;
};

// Throws ValidationError on non-tree input or an unknown root.
PrecedenceGraph build_precedence_graph(const TensorNetwork& net, NodeIndex root);

inline const NodeQuantities& node_quantities(const PrecedenceGraph& pg, NodeIndex v) {
  return pg.quantities(v);
}

// One line per node, indented by depth: `id w=.. F=.. t=.. c=..`.
std::string dump_precedence_graph(const TensorNetwork& net, const PrecedenceGraph& pg);

}  // namespace tnorder
