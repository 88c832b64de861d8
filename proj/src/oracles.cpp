#include "tnorder/oracles.hpp"

#include "tnorder/errors.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace tnorder {

namespace {

using Mask = std::uint32_t;

constexpr std::uint64_t kDeadlinePollMask = (1u << 12) - 1;

struct Neighbor {
  NodeIndex node;
  const Cost* size;
};

std::vector<std::vector<Neighbor>> neighbor_lists(const TensorNetwork& net) {
  std::vector<std::vector<Neighbor>> out(net.size());
  for (NodeIndex v = 0; v < net.size(); ++v) {
    for (const Incidence& inc : net.incident(v)) {
      out[v].push_back({inc.neighbor, &net.edges()[inc.edge].size});
    }
  }
  return out;
}

std::vector<Mask> adjacency_masks(const TensorNetwork& net) {
  std::vector<Mask> out(net.size(), 0);
  for (const Edge& e : net.edges()) {
    out[e.u] |= Mask{1} << e.v;
    out[e.v] |= Mask{1} << e.u;
  }
  return out;
}

}  // namespace

LinearSolution dp_linear_optimal(const TensorNetwork& net, const Deadline& deadline) {
  const std::size_t n = net.size();
  if (n > kLinearDpMaxNodes) {
    throw SizeBoundError("dp-linear supports at most " + std::to_string(kLinearDpMaxNodes) +
                         " nodes, network has " + std::to_string(n));
  }
  if (n == 1) return {{0}, 0};

  struct Entry {
    Cost cost;
    Cost size;
    std::uint8_t last;
  };
  const auto neighbors = neighbor_lists(net);
  const auto adjacent = adjacency_masks(net);

  std::unordered_map<Mask, Entry> table;
  for (NodeIndex v = 0; v < n; ++v) {
    table.emplace(Mask{1} << v, Entry{0, net.tensor_size(v), static_cast<std::uint8_t>(v)});
  }

  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t wide = 1; wide <= full; ++wide) {
    if ((wide & kDeadlinePollMask) == 0) deadline.check();
    const Mask s = static_cast<Mask>(wide);
    if (std::has_single_bit(s)) continue;

    std::optional<Entry> best;
    const Entry* best_rest = nullptr;
    Cost best_shared;
    for (Mask bits = s; bits != 0; bits &= bits - 1) {
      const auto v = static_cast<NodeIndex>(std::countr_zero(bits));
      const Mask rest = s & ~(Mask{1} << v);
      if ((adjacent[v] & rest) == 0) continue;
      auto it = table.find(rest);
      if (it == table.end()) continue;
      Cost shared = 1;
      for (const Neighbor& nb : neighbors[v]) {
        if (rest & (Mask{1} << nb.node)) shared *= *nb.size;
      }
      Cost candidate = it->second.cost + it->second.size * net.tensor_size(v) / shared;
      if (!best || candidate < best->cost) {
        best = Entry{std::move(candidate), 0, static_cast<std::uint8_t>(v)};
        best_rest = &it->second;
        best_shared = std::move(shared);
      }
    }
    if (best) {
      best->size = best_rest->size * net.tensor_size(best->last) / (best_shared * best_shared);
      table.emplace(s, std::move(*best));
    }
  }

  const Mask all = static_cast<Mask>(full);
  LinearSolution out;
  out.cost = table.at(all).cost;
  out.order.resize(n);
  Mask s = all;
  for (std::size_t i = n; i-- > 0;) {
    const std::uint8_t v = table.at(s).last;
    out.order[i] = v;
    s &= ~(Mask{1} << v);
  }
  return out;
}

TreeSolution dp_general_optimal(const TensorNetwork& net, const Deadline& deadline) {
  const std::size_t n = net.size();
  if (n > kGeneralDpMaxNodes) {
    throw SizeBoundError("dp-general supports at most " + std::to_string(kGeneralDpMaxNodes) +
                         " nodes, network has " + std::to_string(n));
  }
  const auto neighbors = neighbor_lists(net);
  const auto adjacent = adjacency_masks(net);
  const Mask full = static_cast<Mask>((std::uint64_t{1} << n) - 1);

  // Connected subsets: a connected set always has a vertex whose removal
  // leaves it connected (a leaf of any spanning tree).
  std::vector<char> connected(std::size_t{full} + 1, 0);
  for (NodeIndex v = 0; v < n; ++v) connected[Mask{1} << v] = 1;
  for (Mask s = 1; s <= full && s != 0; ++s) {
    if (connected[s]) continue;
    for (Mask bits = s; bits != 0; bits &= bits - 1) {
      const auto v = static_cast<NodeIndex>(std::countr_zero(bits));
      const Mask rest = s & ~(Mask{1} << v);
      if (connected[rest] && (adjacent[v] & rest)) {
        connected[s] = 1;
        break;
      }
    }
    if (s == full) break;
  }

  struct Entry {
    Cost cost;
    Cost size;
    Mask left = 0;
  };
  std::vector<Entry> table(std::size_t{full} + 1);
  for (NodeIndex v = 0; v < n; ++v) table[Mask{1} << v] = Entry{0, net.tensor_size(v), 0};

  auto shared_between = [&](Mask left, Mask right) {
    Cost shared = 1;
    for (Mask bits = left; bits != 0; bits &= bits - 1) {
      const auto v = static_cast<NodeIndex>(std::countr_zero(bits));
      if ((adjacent[v] & right) == 0) continue;
      for (const Neighbor& nb : neighbors[v]) {
        if (right & (Mask{1} << nb.node)) shared *= *nb.size;
      }
    }
    return shared;
  };

  std::uint64_t polls = 0;
  for (Mask s = 1; s <= full && s != 0; ++s) {
    if (!connected[s] || std::has_single_bit(s)) {
      if (s == full) break;
      continue;
    }
    const Mask low = s & (~s + 1);
    const Mask others = s & ~low;
    std::optional<Cost> best;
    Mask best_left = 0;
    Cost best_shared;
    // Left side always holds the lowest member, so each split is seen once.
    for (Mask sub = others;; sub = (sub - 1) & others) {
      if ((++polls & kDeadlinePollMask) == 0) deadline.check();
      const Mask left = sub | low;
      const Mask right = s & ~left;
      if (right != 0 && connected[left] && connected[right]) {
        Cost shared = shared_between(left, right);
        Cost candidate =
            table[left].cost + table[right].cost + table[left].size * table[right].size / shared;
        if (!best || candidate < *best) {
          best = std::move(candidate);
          best_left = left;
          best_shared = std::move(shared);
        }
      }
      if (sub == 0) break;
    }
    const Mask right = s & ~best_left;
    table[s].cost = std::move(*best);
    table[s].size = table[best_left].size * table[right].size / (best_shared * best_shared);
    table[s].left = best_left;
    if (s == full) break;
  }

  // Rebuild bottom-up from the split records.
  auto build = [&](auto&& self, Mask s) -> ContractionTree {
    if (std::has_single_bit(s)) return ContractionTree::leaf(std::countr_zero(s));
    const Mask left = table[s].left;
    return ContractionTree::join(self(self, left), self(self, s & ~left));
  };
  return {build(build, full), table[full].cost};
}

TreeSolution linearized_dp(const TensorNetwork& net, const LinearOrder& order) {
  validate_order(net, order);
  const std::size_t n = order.size();
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;

  // size[i][j] for the range order[i..j], grown one tensor at a time.
  std::vector<std::vector<Cost>> size(n, std::vector<Cost>(n));
  for (std::size_t i = 0; i < n; ++i) {
    size[i][i] = net.tensor_size(order[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      Cost shared = 1;
      for (const Incidence& inc : net.incident(order[j])) {
        const std::size_t p = position[inc.neighbor];
        if (p >= i && p < j) shared *= net.edges()[inc.edge].size;
      }
      size[i][j] = size[i][j - 1] * net.tensor_size(order[j]) / (shared * shared);
    }
  }

  // Ranges are scored by (outer products, cost) so that a bracketing without
  // outer products wins whenever the order admits one.
  std::vector<std::vector<Cost>> best(n, std::vector<Cost>(n));
  std::vector<std::vector<std::size_t>> outer(n, std::vector<std::size_t>(n, 0));
  std::vector<std::vector<std::size_t>> split(n, std::vector<std::size_t>(n, 0));
  for (std::size_t len = 2; len <= n; ++len) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      const std::size_t j = i + len - 1;
      bool have = false;
      for (std::size_t k = i; k < j; ++k) {
        Cost shared = 1;
        bool touches = false;
        for (const Edge& e : net.edges()) {
          const std::size_t a = position[e.u];
          const std::size_t b = position[e.v];
          const bool crosses = (a >= i && a <= k && b > k && b <= j) ||
                               (b >= i && b <= k && a > k && a <= j);
          if (crosses) {
            shared *= e.size;
            touches = true;
          }
        }
        const std::size_t products = outer[i][k] + outer[k + 1][j] + (touches ? 0 : 1);
        Cost candidate = best[i][k] + best[k + 1][j] + size[i][k] * size[k + 1][j] / shared;
        if (!have || products < outer[i][j] || (products == outer[i][j] && candidate < best[i][j])) {
          best[i][j] = std::move(candidate);
          outer[i][j] = products;
          split[i][j] = k;
          have = true;
        }
      }
    }
  }

  auto build = [&](auto&& self, std::size_t i, std::size_t j) -> ContractionTree {
    if (i == j) return ContractionTree::leaf(order[i]);
    const std::size_t k = split[i][j];
    return ContractionTree::join(self(self, i, k), self(self, k + 1, j));
  };
  return {build(build, 0, n - 1), best[0][n - 1]};
}

}  // namespace tnorder
