#include "tnorder/heuristics.hpp"

#include "tnorder/cost.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace tnorder {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

TensorNetwork max_spanning_tree(const TensorNetwork& net) {
  if (net.is_tree()) return net;

  auto key = [&](const Edge& e) { return std::minmax(net.id(e.u), net.id(e.v)); };
  std::vector<std::size_t> by_size(net.edges().size());
  std::iota(by_size.begin(), by_size.end(), std::size_t{0});
  std::sort(by_size.begin(), by_size.end(), [&](std::size_t a, std::size_t b) {
    const Edge& x = net.edges()[a];
    const Edge& y = net.edges()[b];
    if (x.size != y.size) return x.size > y.size;
    return key(x) < key(y);
  });

  DisjointSets sets(net.size());
  std::vector<bool> kept(net.edges().size(), false);
  for (std::size_t e : by_size) {
    kept[e] = sets.unite(net.edges()[e].u, net.edges()[e].v);
  }

  std::vector<Node> nodes = net.nodes();
  std::vector<Edge> edges;
  edges.reserve(net.size() - 1);
  for (std::size_t e = 0; e < net.edges().size(); ++e) {
    const Edge& edge = net.edges()[e];
    if (kept[e]) {
      edges.push_back(edge);
    } else {
      nodes[edge.u].open_mult *= edge.size;
      nodes[edge.v].open_mult *= edge.size;
    }
  }
  return TensorNetwork(std::move(nodes), std::move(edges));
}

ArbitrarySolution order_arbitrary(const TensorNetwork& net, const IksOptions& options) {
  const TensorNetwork tree = max_spanning_tree(net);
  IksResult iks = iks_order(tree, options);
  ArbitrarySolution out;
  out.cost = evaluate_linear(net, iks.order).cost;
  out.tree_estimate = std::move(iks.cost);
  out.order = std::move(iks.order);
  return out;
}

}  // namespace tnorder
