#include "tnorder/network.hpp"

#include "tnorder/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <set>
#include <utility>

namespace tnorder {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string edge_label(const TensorNetwork& net, const Edge& e) {
  return net.id(e.u) + "-" + net.id(e.v);
}

Cost read_integer(const json& value, const std::string& where) {
  if (value.is_number_unsigned()) return Cost(value.get<std::uint64_t>());
  if (value.is_number_integer()) {
    auto v = value.get<std::int64_t>();
    if (v < 0) throw ValidationError(where + ": must be >= 1, got " + std::to_string(v));
    return Cost(v);
  }
  if (value.is_string()) {
    try {
      return parse_decimal(value.get<std::string>());
    } catch (const ValidationError& e) {
      throw ValidationError(where + ": " + e.what());
    }
  }
  throw ValidationError(where + ": expected an integer");
}

ordered_json write_integer(const Cost& value) {
  if (value <= std::numeric_limits<std::uint64_t>::max()) {
    return ordered_json(static_cast<std::uint64_t>(value));
  }
  return ordered_json(to_decimal(value));
}

}  // namespace

TensorNetwork::TensorNetwork(std::vector<Node> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  if (nodes_.empty()) throw ValidationError("network has no nodes");

  for (NodeIndex v = 0; v < nodes_.size(); ++v) {
    const Node& n = nodes_[v];
    if (n.id.empty()) throw ValidationError("node #" + std::to_string(v) + " has an empty id");
    if (n.open_mult < 1) {
      throw ValidationError("node " + n.id + ": open multiplier must be >= 1");
    }
    if (!by_id_.emplace(n.id, v).second) throw ValidationError("duplicate node id " + n.id);
  }

  adjacency_.resize(nodes_.size());
  std::set<std::pair<NodeIndex, NodeIndex>> seen;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (edge.u >= nodes_.size() || edge.v >= nodes_.size()) {
      throw ValidationError("edge #" + std::to_string(e) + " references an unknown node");
    }
    if (edge.u == edge.v) throw ValidationError("self-loop on node " + nodes_[edge.u].id);
    if (edge.size < 1) {
      throw ValidationError("edge " + edge_label(*this, edge) + ": size must be >= 1");
    }
    auto key = std::minmax(edge.u, edge.v);
    if (!seen.insert(key).second) {
      throw ValidationError("duplicate edge " + edge_label(*this, edge) +
                            " (merge parallel legs by product)");
    }
    adjacency_[edge.u].push_back({edge.v, e});
    adjacency_[edge.v].push_back({edge.u, e});
  }

  std::vector<bool> reached(nodes_.size(), false);
  std::vector<NodeIndex> stack{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    NodeIndex v = stack.back();
    stack.pop_back();
    for (const Incidence& inc : adjacency_[v]) {
      if (!reached[inc.neighbor]) {
        reached[inc.neighbor] = true;
        ++count;
        stack.push_back(inc.neighbor);
      }
    }
  }
  if (count != nodes_.size()) {
    auto it = std::find(reached.begin(), reached.end(), false);
    throw ValidationError("network is disconnected: node " +
                          nodes_[static_cast<std::size_t>(it - reached.begin())].id +
                          " is unreachable from " + nodes_[0].id);
  }

  tensor_size_.reserve(nodes_.size());
  for (NodeIndex v = 0; v < nodes_.size(); ++v) {
    Cost size = nodes_[v].open_mult;
    for (const Incidence& inc : adjacency_[v]) size *= edges_[inc.edge].size;
    tensor_size_.push_back(std::move(size));
  }
}

TensorNetwork TensorNetwork::from_specs(const std::vector<NodeSpec>& nodes,
                                        const std::vector<EdgeSpec>& edges) {
  std::vector<Node> ns;
  ns.reserve(nodes.size());
  std::unordered_map<std::string, NodeIndex> index;
  for (const NodeSpec& n : nodes) {
    index.emplace(n.id, ns.size());
    ns.push_back({n.id, n.open});
  }
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const EdgeSpec& e : edges) {
    auto u = index.find(e.u);
    auto v = index.find(e.v);
    if (u == index.end()) throw ValidationError("edge " + e.u + "-" + e.v + ": unknown node " + e.u);
    if (v == index.end()) throw ValidationError("edge " + e.u + "-" + e.v + ": unknown node " + e.v);
    es.push_back({u->second, v->second, e.size});
  }
  return TensorNetwork(std::move(ns), std::move(es));
}

std::optional<NodeIndex> TensorNetwork::find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

NodeIndex TensorNetwork::index_of(std::string_view id) const {
  if (auto v = find(id)) return *v;
  throw ValidationError("unknown node id " + std::string(id));
}

std::vector<NodeIndex> TensorNetwork::indices_of(const std::vector<std::string>& ids) const {
  std::vector<NodeIndex> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(index_of(id));
  return out;
}

std::optional<std::size_t> TensorNetwork::edge_between(NodeIndex a, NodeIndex b) const {
  for (const Incidence& inc : adjacency_.at(a)) {
    if (inc.neighbor == b) return inc.edge;
  }
  return std::nullopt;
}

TensorNetwork parse_network(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("syntax error: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("network file must be a JSON object");
  if (!doc.contains("nodes") || !doc["nodes"].is_array()) {
    throw ValidationError("network file: missing \"nodes\" array");
  }
  std::vector<NodeSpec> nodes;
  std::size_t i = 0;
  for (const json& n : doc["nodes"]) {
    const std::string where = "nodes[" + std::to_string(i++) + "]";
    if (!n.is_object() || !n.contains("id")) throw ValidationError(where + ": missing \"id\"");
    const json& id = n["id"];
    NodeSpec spec;
    if (id.is_string()) {
      spec.id = id.get<std::string>();
    } else if (id.is_number_integer()) {
      spec.id = id.dump();
    } else {
      throw ValidationError(where + ": \"id\" must be a string or integer");
    }
    if (n.contains("open")) spec.open = read_integer(n["open"], where + " (" + spec.id + ").open");
    nodes.push_back(std::move(spec));
  }
  std::vector<EdgeSpec> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ValidationError("network file: \"edges\" must be an array");
    i = 0;
    for (const json& e : doc["edges"]) {
      const std::string where = "edges[" + std::to_string(i++) + "]";
      if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e.contains("size")) {
        throw ValidationError(where + ": expected {\"u\",\"v\",\"size\"}");
      }
      auto endpoint = [&](const json& x) {
        if (x.is_string()) return x.get<std::string>();
        if (x.is_number_integer()) return x.dump();
        throw ValidationError(where + ": endpoint must be a string or integer");
      };
      EdgeSpec spec{endpoint(e["u"]), endpoint(e["v"]), 0};
      spec.size = read_integer(e["size"], where + " (" + spec.u + "-" + spec.v + ").size");
      edges.push_back(std::move(spec));
    }
  }
  return TensorNetwork::from_specs(nodes, edges);
}

std::string network_to_json(const TensorNetwork& net) {
  ordered_json doc;
  doc["nodes"] = ordered_json::array();
  for (const Node& n : net.nodes()) {
    doc["nodes"].push_back({{"id", n.id}, {"open", write_integer(n.open_mult)}});
  }
  doc["edges"] = ordered_json::array();
  for (const Edge& e : net.edges()) {
    doc["edges"].push_back({{"u", net.id(e.u)}, {"v", net.id(e.v)}, {"size", write_integer(e.size)}});
  }
  return doc.dump(1) + "\n";
}

}  // namespace tnorder
