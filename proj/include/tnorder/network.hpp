#pragma once

#include "tnorder/numeric.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tnorder {

// Position of a tensor in file order. Bitmask-based algorithms use this
// index as the bit position.
using NodeIndex = std::size_t;

struct Node {
  std::string id;
  // Product of the dimensions of legs not shared with any other tensor.
  Cost open_mult = 1;
};

struct Edge {
  NodeIndex u;
  NodeIndex v;
  Cost size;
};

struct Incidence {
  NodeIndex neighbor;
  std::size_t edge;
};

struct NodeSpec {
  std::string id;
  Cost open = 1;
};

struct EdgeSpec {
  std::string u;
  std::string v;
  Cost size;
};

// Undirected weighted graph of tensors. Edge size is the dimension of the leg
// shared by its two endpoints. Construction validates: non-empty, unique ids,
// no self-loops, at most one edge per pair, all sizes >= 1, connected.
// Immutable afterwards.
class TensorNetwork {
 public:
  TensorNetwork(std::vector<Node> nodes, std::vector<Edge> edges);

  static TensorNetwork from_specs(const std::vector<NodeSpec>& nodes,
                                  const std::vector<EdgeSpec>& edges);

  std::size_t size() const { return nodes_.size(); }
  const Node& node(NodeIndex v) const { return nodes_.at(v); }
  const std::string& id(NodeIndex v) const { return nodes_.at(v).id; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Incidence> incident(NodeIndex v) const { return adjacency_.at(v); }

  bool is_tree() const { return edges_.size() + 1 == nodes_.size(); }

  std::optional<NodeIndex> find(std::string_view id) const;
  // Throws ValidationError naming the id when absent.
  NodeIndex index_of(std::string_view id) const;
  std::vector<NodeIndex> indices_of(const std::vector<std::string>& ids) const;

  std::optional<std::size_t> edge_between(NodeIndex a, NodeIndex b) const;

  // open_mult times the product of all incident edge sizes.
  const Cost& tensor_size(NodeIndex v) const { return tensor_size_.at(v); }

 private:
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::vector<Cost> tensor_size_;
  std::unordered_map<std::string, NodeIndex> by_id_;
};

// `{"nodes":[{"id":"T1","open":1},...],"edges":[{"u":"T1","v":"T2","size":1},...]}`
// Integers may be given as JSON numbers or as decimal strings.
TensorNetwork parse_network(std::string_view text);
std::string network_to_json(const TensorNetwork& net);

}  // namespace tnorder
