#include "tnorder/cost.hpp"

#include "tnorder/errors.hpp"

#include <vector>

namespace tnorder {

namespace {

std::vector<char> membership(const TensorNetwork& net, NodeSet s, const char* what) {
  if (s.empty()) throw ValidationError(std::string(what) + " must be non-empty");
  std::vector<char> in(net.size(), 0);
  for (NodeIndex v : s) {
    if (v >= net.size()) throw ValidationError(std::string(what) + " references an unknown node");
    in[v] = 1;
  }
  return in;
}

// Labels: 0 outside, 1 in X, 2 in Y.
Cost crossing_product(const TensorNetwork& net, const std::vector<char>& label) {
  Cost shared = 1;
  for (const Edge& e : net.edges()) {
    const char a = label[e.u];
    const char b = label[e.v];
    if (a != 0 && b != 0 && a != b) shared *= e.size;
  }
  return shared;
}

Cost size_of(const TensorNetwork& net, const std::vector<char>& in) {
  Cost size = 1;
  for (NodeIndex v = 0; v < net.size(); ++v) {
    if (in[v]) size *= net.node(v).open_mult;
  }
  for (const Edge& e : net.edges()) {
    if (in[e.u] != in[e.v]) size *= e.size;
  }
  return size;
}

std::vector<char> pair_labels(const TensorNetwork& net, NodeSet x, NodeSet y) {
  auto in_x = membership(net, x, "first operand");
  auto in_y = membership(net, y, "second operand");
  std::vector<char> label(net.size(), 0);
  for (NodeIndex v = 0; v < net.size(); ++v) {
    if (in_x[v] && in_y[v]) throw ValidationError("operands overlap at node " + net.id(v));
    label[v] = in_x[v] ? 1 : (in_y[v] ? 2 : 0);
  }
  return label;
}

}  // namespace

Cost subset_size(const TensorNetwork& net, NodeSet s) {
  return size_of(net, membership(net, s, "subset"));
}

Cost shared_size(const TensorNetwork& net, NodeSet x, NodeSet y) {
  return crossing_product(net, pair_labels(net, x, y));
}

Cost pair_contraction_cost(const TensorNetwork& net, NodeSet x, NodeSet y) {
  const Cost shared = crossing_product(net, pair_labels(net, x, y));
  return subset_size(net, x) * subset_size(net, y) / shared;
}

Evaluation evaluate_linear(const TensorNetwork& net, const LinearOrder& order) {
  validate_order(net, order);
  Evaluation out{0, true};
  std::vector<char> in(net.size(), 0);
  in[order[0]] = 1;
  Cost current = net.tensor_size(order[0]);
  for (std::size_t i = 1; i < order.size(); ++i) {
    const NodeIndex v = order[i];
    Cost shared = 1;
    bool touches = false;
    for (const Incidence& inc : net.incident(v)) {
      if (in[inc.neighbor]) {
        shared *= net.edges()[inc.edge].size;
        touches = true;
      }
    }
    out.outer_product_free = out.outer_product_free && touches;
    const Cost step = current * net.tensor_size(v) / shared;
    out.cost += step;
    current = step / shared;
    in[v] = 1;
  }
  return out;
}

Evaluation evaluate_tree(const TensorNetwork& net, const ContractionTree& tree) {
  validate_tree(net, tree);
  Evaluation out{0, true};
  // Owner of each network node: the tree vertex whose subtree currently
  // holds it. Sizes are tracked per vertex.
  std::vector<ContractionTree::Handle> owner(net.size(), ContractionTree::Vertex::kNone);
  std::vector<Cost> size(tree.vertex_count());
  std::vector<std::vector<NodeIndex>> members(tree.vertex_count());
  for (auto h : tree.postorder()) {
    const auto& vx = tree.vertex(h);
    if (vx.is_leaf()) {
      size[h] = net.tensor_size(vx.leaf);
      members[h] = {vx.leaf};
      owner[vx.leaf] = h;
      continue;
    }
    Cost shared = 1;
    bool touches = false;
    for (NodeIndex v : members[vx.right]) {
      for (const Incidence& inc : net.incident(v)) {
        if (owner[inc.neighbor] == vx.left) {
          shared *= net.edges()[inc.edge].size;
          touches = true;
        }
      }
    }
    out.outer_product_free = out.outer_product_free && touches;
    const Cost step = size[vx.left] * size[vx.right] / shared;
    out.cost += step;
    size[h] = step / shared;
    members[h] = std::move(members[vx.left]);
    members[h].insert(members[h].end(), members[vx.right].begin(), members[vx.right].end());
    for (NodeIndex v : members[h]) owner[v] = h;
    members[vx.right].clear();
  }
  return out;
}

Evaluation evaluate_plan(const TensorNetwork& net, const ContractionPlan& plan) {
  if (const auto* order = std::get_if<LinearOrder>(&plan)) return evaluate_linear(net, *order);
  return evaluate_tree(net, std::get<ContractionTree>(plan));
}

bool check_outer_product_free(const TensorNetwork& net, const ContractionPlan& plan) {
  validate_plan(net, plan);
  if (const auto* order = std::get_if<LinearOrder>(&plan)) {
    std::vector<char> in(net.size(), 0);
    in[(*order)[0]] = 1;
    for (std::size_t i = 1; i < order->size(); ++i) {
      const NodeIndex v = (*order)[i];
      bool touches = false;
      for (const Incidence& inc : net.incident(v)) touches = touches || in[inc.neighbor];
      if (!touches) return false;
      in[v] = 1;
    }
    return true;
  }
  const auto& tree = std::get<ContractionTree>(plan);
  std::vector<ContractionTree::Handle> owner(net.size(), ContractionTree::Vertex::kNone);
  std::vector<std::vector<NodeIndex>> members(tree.vertex_count());
  for (auto h : tree.postorder()) {
    const auto& vx = tree.vertex(h);
    if (vx.is_leaf()) {
      members[h] = {vx.leaf};
      owner[vx.leaf] = h;
      continue;
    }
    bool touches = false;
    for (NodeIndex v : members[vx.right]) {
      for (const Incidence& inc : net.incident(v)) touches = touches || owner[inc.neighbor] == vx.left;
    }
    if (!touches) return false;
    members[h] = std::move(members[vx.left]);
    members[h].insert(members[h].end(), members[vx.right].begin(), members[vx.right].end());
    for (NodeIndex v : members[h]) owner[v] = h;
  }
  return true;
}

}  // namespace tnorder
