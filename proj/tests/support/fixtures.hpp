#pragma once

#include "tnorder/network.hpp"

namespace tnorder::testing {

// Five-tensor tree: T1-T2:1, T5-T2:2, T2-T4:6, T4-T3:5.
inline TensorNetwork five_node_tree() {
  return TensorNetwork::from_specs(
      {{"T1"}, {"T2"}, {"T3"}, {"T4"}, {"T5"}},
      {{"T1", "T2", 1}, {"T5", "T2", 2}, {"T2", "T4", 6}, {"T4", "T3", 5}});
}

// 20x30 * 30x10 * 10x50 matrix chain.
inline TensorNetwork matrix_chain_network() {
  return TensorNetwork::from_specs({{"A", 20}, {"B"}, {"C", 50}},
                                   {{"A", "B", 30}, {"B", "C", 10}});
}

inline TensorNetwork two_node_network(Cost size = 7) {
  return TensorNetwork::from_specs({{"u"}, {"v"}}, {{"u", "v", size}});
}

// Star centred on T1 whose two candidate first steps cost pqr+qr+r and
// pq+pr+r for p=2, q=3, r=4.
inline TensorNetwork rank_example_network() {
  return TensorNetwork::from_specs({{"T1"}, {"T2", 4}, {"T3"}, {"T4"}},
                                   {{"T1", "T2", 2}, {"T1", "T3", 1}, {"T1", "T4", 3}});
}

inline TensorNetwork chain_network(std::size_t n, Cost dim) {
  std::vector<NodeSpec> nodes;
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 1; i <= n; ++i) {
    nodes.push_back({"T" + std::to_string(i)});
    if (i > 1) edges.push_back({"T" + std::to_string(i - 1), "T" + std::to_string(i), dim});
  }
  return TensorNetwork::from_specs(nodes, edges);
}

}  // namespace tnorder::testing

#include "tnorder/generator.hpp"

#include <random>
#include <set>

namespace tnorder::testing {

// Random tree plus up to `extra` additional edges, with random open legs.
inline TensorNetwork random_network(std::size_t n, std::size_t extra, std::uint64_t seed) {
  const TensorNetwork tree = generate_random_tree_network(n, seed, 1, 6);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<Node> nodes = tree.nodes();
  std::uniform_int_distribution<int> open(1, 3);
  for (Node& node : nodes) node.open_mult = open(rng);
  std::vector<Edge> edges = tree.edges();
  std::set<std::pair<NodeIndex, NodeIndex>> used;
  for (const Edge& e : edges) used.insert(std::minmax(e.u, e.v));
  std::uniform_int_distribution<NodeIndex> pick(0, n - 1);
  std::uniform_int_distribution<int> dim(1, 6);
  for (std::size_t k = 0; k < extra; ++k) {
    const NodeIndex a = pick(rng);
    const NodeIndex b = pick(rng);
    if (a == b || !used.insert(std::minmax(a, b)).second) continue;
    edges.push_back({a, b, Cost(dim(rng))});
  }
  return TensorNetwork(std::move(nodes), std::move(edges));
}

}  // namespace tnorder::testing
