#include "tnorder/plan.hpp"

#include "tnorder/errors.hpp"

#include <json.hpp>

#include <utility>

namespace tnorder {

namespace {

using nlohmann::json;

ContractionTree tree_from_json(const TensorNetwork& net, const json& node, int depth) {
  if (depth > 100000) throw ValidationError("plan tree nested too deeply");
  if (node.is_string()) return ContractionTree::leaf(net.index_of(node.get<std::string>()));
  if (node.is_number_integer()) return ContractionTree::leaf(net.index_of(node.dump()));
  if (node.is_array() && node.size() == 2) {
    return ContractionTree::join(tree_from_json(net, node[0], depth + 1),
                                 tree_from_json(net, node[1], depth + 1));
  }
  throw ValidationError("plan tree: each internal node must be a pair, got " + node.dump());
}

json tree_to_json(const TensorNetwork& net, const ContractionTree& tree,
                  ContractionTree::Handle h) {
  const auto& v = tree.vertex(h);
  if (v.is_leaf()) return net.id(v.leaf);
  return json::array({tree_to_json(net, tree, v.left), tree_to_json(net, tree, v.right)});
}

void check_permutation(const TensorNetwork& net, const std::vector<NodeIndex>& items,
                       const char* what) {
  if (items.size() != net.size()) {
    throw ValidationError(std::string(what) + " has " + std::to_string(items.size()) +
                          " entries, network has " + std::to_string(net.size()) + " nodes");
  }
  std::vector<bool> seen(net.size(), false);
  for (NodeIndex v : items) {
    if (v >= net.size()) throw ValidationError(std::string(what) + " references an unknown node");
    if (seen[v]) throw ValidationError(std::string(what) + " repeats node " + net.id(v));
    seen[v] = true;
  }
}

}  // namespace

ContractionTree ContractionTree::leaf(NodeIndex v) {
  ContractionTree t;
  Vertex vx;
  vx.leaf = v;
  t.vertices_.push_back(vx);
  t.root_ = 0;
  return t;
}

ContractionTree::Handle ContractionTree::append(const ContractionTree& other) {
  const auto offset = static_cast<Handle>(vertices_.size());
  for (Vertex v : other.vertices_) {
    if (!v.is_leaf()) {
      v.left += offset;
      v.right += offset;
    }
    vertices_.push_back(v);
  }
  return other.root_ + offset;
}

ContractionTree ContractionTree::join(const ContractionTree& left, const ContractionTree& right) {
  ContractionTree t;
  t.vertices_.reserve(left.vertices_.size() + right.vertices_.size() + 1);
  Vertex top;
  top.left = t.append(left);
  top.right = t.append(right);
  t.root_ = static_cast<Handle>(t.vertices_.size());
  t.vertices_.push_back(top);
  return t;
}

ContractionTree ContractionTree::left_deep(const LinearOrder& order) {
  if (order.empty()) throw ValidationError("cannot build a tree from an empty order");
  ContractionTree t;
  Vertex first;
  first.leaf = order[0];
  t.vertices_.push_back(first);
  Handle acc = 0;
  for (std::size_t i = 1; i < order.size(); ++i) {
    Vertex leaf;
    leaf.leaf = order[i];
    const auto leaf_handle = static_cast<Handle>(t.vertices_.size());
    t.vertices_.push_back(leaf);
    Vertex join;
    join.left = acc;
    join.right = leaf_handle;
    acc = static_cast<Handle>(t.vertices_.size());
    t.vertices_.push_back(join);
  }
  t.root_ = acc;
  return t;
}

std::vector<ContractionTree::Handle> ContractionTree::postorder() const {
  std::vector<Handle> out;
  out.reserve(vertices_.size());
  std::vector<std::pair<Handle, bool>> stack{{root_, false}};
  while (!stack.empty()) {
    auto [h, expanded] = stack.back();
    stack.pop_back();
    const Vertex& v = vertices_[h];
    if (v.is_leaf() || expanded) {
      out.push_back(h);
      continue;
    }
    stack.push_back({h, true});
    stack.push_back({v.right, false});
    stack.push_back({v.left, false});
  }
  return out;
}

std::vector<NodeIndex> ContractionTree::leaves() const {
  std::vector<NodeIndex> out;
  for (Handle h : postorder()) {
    if (vertices_[h].is_leaf()) out.push_back(vertices_[h].leaf);
  }
  return out;
}

void validate_order(const TensorNetwork& net, const LinearOrder& order) {
  check_permutation(net, order, "linear order");
}

void validate_tree(const TensorNetwork& net, const ContractionTree& tree) {
  check_permutation(net, tree.leaves(), "contraction tree");
}

void validate_plan(const TensorNetwork& net, const ContractionPlan& plan) {
  std::visit(
      [&](const auto& p) {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, LinearOrder>) {
          validate_order(net, p);
        } else {
          validate_tree(net, p);
        }
      },
      plan);
}

ContractionPlan parse_plan(const TensorNetwork& net, std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("plan syntax error: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("type") || !doc["type"].is_string()) {
    throw ValidationError("plan file: missing \"type\"");
  }
  const auto type = doc["type"].get<std::string>();
  if (type == "linear") {
    if (!doc.contains("order") || !doc["order"].is_array()) {
      throw ValidationError("linear plan: missing \"order\" array");
    }
    LinearOrder order;
    for (const json& id : doc["order"]) {
      if (id.is_string()) {
        order.push_back(net.index_of(id.get<std::string>()));
      } else if (id.is_number_integer()) {
        order.push_back(net.index_of(id.dump()));
      } else {
        throw ValidationError("linear plan: order entries must be node ids");
      }
    }
    validate_order(net, order);
    return order;
  }
  if (type == "tree") {
    if (!doc.contains("root")) throw ValidationError("tree plan: missing \"root\"");
    ContractionTree tree = tree_from_json(net, doc["root"], 0);
    validate_tree(net, tree);
    return tree;
  }
  throw ValidationError("plan file: unknown type '" + type + "'");
}

std::string plan_to_json(const TensorNetwork& net, const ContractionPlan& plan) {
  if (const auto* order = std::get_if<LinearOrder>(&plan)) {
    json ids = json::array();
    for (NodeIndex v : *order) ids.push_back(net.id(v));
    return "{\"type\":\"linear\",\"order\":" + ids.dump() + "}\n";
  }
  const auto& tree = std::get<ContractionTree>(plan);
  return "{\"type\":\"tree\",\"root\":" + tree_to_json(net, tree, tree.root()).dump() + "}\n";
}

}  // namespace tnorder
