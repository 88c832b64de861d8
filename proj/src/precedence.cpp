#include "tnorder/precedence.hpp"

#include "tnorder/errors.hpp"

#include <sstream>
#include <utility>

namespace tnorder {

namespace {
constexpr NodeIndex kNoParent = static_cast<NodeIndex>(-1);
}

std::optional<NodeIndex> PrecedenceGraph::parent(NodeIndex v) const {
  if (parent_.at(v) == kNoParent) return std::nullopt;
  return parent_[v];
}

const NodeQuantities& PrecedenceGraph::quantities(NodeIndex v) const {
  if (v >= quantities_.size()) throw ValidationError("unknown node in precedence graph");
  return quantities_[v];
}

PrecedenceGraph build_precedence_graph(const TensorNetwork& net, NodeIndex root) {
  if (!net.is_tree()) {
    throw ValidationError("precedence graphs need a tree network (" +
                          std::to_string(net.edges().size()) + " edges for " +
                          std::to_string(net.size()) + " nodes)");
  }
  if (root >= net.size()) throw ValidationError("unknown root node");

  PrecedenceGraph pg;
  pg.root_ = root;
  pg.parent_.assign(net.size(), kNoParent);
  pg.children_.assign(net.size(), {});
  pg.quantities_.resize(net.size());
  pg.preorder_.reserve(net.size());

  std::vector<Cost> parent_edge(net.size(), 1);
  std::vector<bool> visited(net.size(), false);
  std::vector<NodeIndex> stack{root};
  visited[root] = true;
  while (!stack.empty()) {
    const NodeIndex v = stack.back();
    stack.pop_back();
    pg.preorder_.push_back(v);
    const auto incident = net.incident(v);
    // Reverse push so children are visited in adjacency order.
    for (auto it = incident.rbegin(); it != incident.rend(); ++it) {
      if (visited[it->neighbor]) continue;
      visited[it->neighbor] = true;
      pg.parent_[it->neighbor] = v;
      parent_edge[it->neighbor] = net.edges()[it->edge].size;
      stack.push_back(it->neighbor);
    }
  }
  for (NodeIndex v : pg.preorder_) {
    if (pg.parent_[v] != kNoParent) pg.children_[pg.parent_[v]].push_back(v);
  }

  for (NodeIndex v = 0; v < net.size(); ++v) {
    NodeQuantities& q = pg.quantities_[v];
    q.parent_edge = parent_edge[v];
    q.tensor_size = net.tensor_size(v);
    q.growth = Rational(q.tensor_size, q.parent_edge * q.parent_edge);
    q.step_cost = Rational(q.tensor_size, q.parent_edge);
  }
  return pg;
}

std::string dump_precedence_graph(const TensorNetwork& net, const PrecedenceGraph& pg) {
  std::vector<std::size_t> depth(net.size(), 0);
  std::ostringstream out;
  for (NodeIndex v : pg.preorder()) {
    if (auto p = pg.parent(v)) depth[v] = depth[*p] + 1;
    const auto& q = pg.quantities(v);
    out << std::string(2 * depth[v], ' ') << net.id(v) << " w=" << to_decimal(q.parent_edge)
        << " F=" << to_decimal(q.tensor_size) << " t=" << to_string(q.growth)
        << " c=" << to_string(q.step_cost) << '\n';
  }
  return out.str();
}

}  // namespace tnorder
