#pragma once

#include "tnorder/network.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tnorder {

// Permutation of node indices; contracted left to right into one growing tensor.
using LinearOrder = std::vector<NodeIndex>;

// Full binary tree stored as an arena. Leaves carry node indices; every
// internal node has exactly two children.
class ContractionTree {
 public:
  using Handle = std::uint32_t;

  struct Vertex {
    static constexpr Handle kNone = UINT32_MAX;
    Handle left = kNone;
    Handle right = kNone;
    NodeIndex leaf = 0;
    bool is_leaf() const { return left == kNone; }
  };

  static ContractionTree leaf(NodeIndex v);
  static ContractionTree join(const ContractionTree& left, const ContractionTree& right);
  // ((((p0 p1) p2) p3) ...)
  static ContractionTree left_deep(const LinearOrder& order);

  Handle root() const { return root_; }
  const Vertex& vertex(Handle h) const { return vertices_.at(h); }
  std::size_t vertex_count() const { return vertices_.size(); }

  // Leaves in left-to-right order.
  std::vector<NodeIndex> leaves() const;

  // Children always appear before their parent.
  std::vector<Handle> postorder() const;

 private:
  Handle append(const ContractionTree& other);

  std::vector<Vertex> vertices_;
  Handle root_ = 0;
};

using ContractionPlan = std::variant<LinearOrder, ContractionTree>;

// Throws ValidationError unless every node appears exactly once.
void validate_order(const TensorNetwork& net, const LinearOrder& order);
void validate_tree(const TensorNetwork& net, const ContractionTree& tree);
void validate_plan(const TensorNetwork& net, const ContractionPlan& plan);

// `{"type":"linear","order":[...]}` or `{"type":"tree","root":[["A","B"],"C"]}`.
ContractionPlan parse_plan(const TensorNetwork& net, std::string_view text);
std::string plan_to_json(const TensorNetwork& net, const ContractionPlan& plan);

}  // namespace tnorder
