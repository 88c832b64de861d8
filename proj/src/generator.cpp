#include "tnorder/generator.hpp"

#include "tnorder/errors.hpp"

#include <functional>
#include <queue>
#include <random>
#include <string>

namespace tnorder {

std::vector<std::pair<NodeIndex, NodeIndex>> decode_pruefer(const std::vector<NodeIndex>& sequence) {
  const std::size_t n = sequence.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (NodeIndex v : sequence) {
    if (v >= n) throw ValidationError("Pruefer entry out of range");
    ++degree[v];
  }
  std::priority_queue<NodeIndex, std::vector<NodeIndex>, std::greater<>> leaves;
  for (NodeIndex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<std::pair<NodeIndex, NodeIndex>> edges;
  edges.reserve(n - 1);
  for (NodeIndex v : sequence) {
    const NodeIndex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) leaves.push(v);
  }
  const NodeIndex a = leaves.top();
  leaves.pop();
  const NodeIndex b = leaves.top();
  edges.emplace_back(a, b);
  return edges;
}

TensorNetwork generate_random_tree_network(std::size_t n, std::uint64_t seed,
                                           std::uint64_t dim_lo, std::uint64_t dim_hi) {
  if (n < 2) throw ValidationError("generator needs n >= 2");
  if (dim_lo < 1 || dim_lo > dim_hi) {
    throw ValidationError("generator needs 1 <= dim-lo <= dim-hi");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<NodeIndex> label(0, n - 1);
  std::uniform_int_distribution<std::uint64_t> dim(dim_lo, dim_hi);

  std::vector<NodeIndex> sequence(n - 2);
  for (auto& x : sequence) x = label(rng);

  std::vector<Node> nodes;
  nodes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) nodes.push_back({"T" + std::to_string(i + 1), 1});
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (auto [u, v] : decode_pruefer(sequence)) edges.push_back({u, v, Cost(dim(rng))});
  return TensorNetwork(std::move(nodes), std::move(edges));
}

}  // namespace tnorder
