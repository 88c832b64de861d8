#include "tnorder/iks.hpp"

#include "tnorder/cost.hpp"
#include "tnorder/errors.hpp"

#include <queue>
#include <sstream>
#include <utility>

namespace tnorder {

SequenceEntry SequenceEntry::single(const PrecedenceGraph& pg, NodeIndex v) {
  const NodeQuantities& q = pg.quantities(v);
  return SequenceEntry{{v}, q.growth, q.step_cost};
}

Rational SequenceEntry::rank() const { return (multiplier - 1) / cost; }

SequenceEntry concat(const SequenceEntry& first, const SequenceEntry& second) {
  SequenceEntry out;
  out.members.reserve(first.members.size() + second.members.size());
  out.members = first.members;
  out.members.insert(out.members.end(), second.members.begin(), second.members.end());
  out.multiplier = first.multiplier * second.multiplier;
  out.cost = first.cost + first.multiplier * second.cost;
  return out;
}

bool rank_leq(const SequenceEntry& u, const SequenceEntry& v) {
  return (u.multiplier - 1) * v.cost <= (v.multiplier - 1) * u.cost;
}

std::vector<SequenceEntry> normalize_chain(std::vector<SequenceEntry> chain) {
  std::vector<SequenceEntry> out;
  out.reserve(chain.size());
  for (SequenceEntry& entry : chain) {
    out.push_back(std::move(entry));
    while (out.size() >= 2 && !rank_leq(out[out.size() - 2], out.back())) {
      SequenceEntry fused = concat(out[out.size() - 2], out.back());
      out.pop_back();
      out.back() = std::move(fused);
    }
  }
  return out;
}

std::vector<SequenceEntry> merge_children(std::vector<std::vector<SequenceEntry>> lists,
                                          const TensorNetwork& net) {
  if (lists.size() == 1) return std::move(lists.front());

  struct Cursor {
    std::size_t list;
    std::size_t pos;
  };
  auto head = [&](const Cursor& c) -> const SequenceEntry& { return lists[c.list][c.pos]; };
  // priority_queue pops the largest; "later" means lower priority.
  auto later = [&](const Cursor& a, const Cursor& b) {
    const SequenceEntry& x = head(a);
    const SequenceEntry& y = head(b);
    const bool x_le_y = rank_leq(x, y);
    const bool y_le_x = rank_leq(y, x);
    if (x_le_y != y_le_x) return y_le_x;
    return net.id(y.members.front()) < net.id(x.members.front());
  };
  std::priority_queue<Cursor, std::vector<Cursor>, decltype(later)> heap(later);
  std::size_t total = 0;
  for (std::size_t i = 0; i < lists.size(); ++i) {
    total += lists[i].size();
    if (!lists[i].empty()) heap.push({i, 0});
  }
  std::vector<SequenceEntry> out;
  out.reserve(total);
  while (!heap.empty()) {
    Cursor c = heap.top();
    heap.pop();
    out.push_back(std::move(lists[c.list][c.pos]));
    if (++c.pos < lists[c.list].size()) heap.push(c);
  }
  return out;
}

RootLinearization linearize_root(const TensorNetwork& net, const PrecedenceGraph& pg) {
  // chains[v]: normalized linearization of the subtree below and including v.
  std::vector<std::vector<SequenceEntry>> chains(net.size());
  const auto& preorder = pg.preorder();
  std::vector<SequenceEntry> root_chain;
  for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
    const NodeIndex v = *it;
    std::vector<std::vector<SequenceEntry>> below;
    below.reserve(pg.children(v).size());
    for (NodeIndex child : pg.children(v)) below.push_back(std::move(chains[child]));
    std::vector<SequenceEntry> merged =
        below.empty() ? std::vector<SequenceEntry>{} : merge_children(std::move(below), net);
    if (v == pg.root()) {
      root_chain = std::move(merged);
      break;
    }
    std::vector<SequenceEntry> chain;
    chain.reserve(merged.size() + 1);
    chain.push_back(SequenceEntry::single(pg, v));
    for (auto& e : merged) chain.push_back(std::move(e));
    chains[v] = normalize_chain(std::move(chain));
  }

  RootLinearization out;
  out.root = pg.root();
  out.order.reserve(net.size());
  out.order.push_back(pg.root());
  for (const SequenceEntry& e : root_chain) {
    out.order.insert(out.order.end(), e.members.begin(), e.members.end());
  }
  out.cost = evaluate_linear(net, out.order).cost;
  out.chain = std::move(root_chain);
  return out;
}

IksResult iks_order(const TensorNetwork& net, const IksOptions& options) {
  if (!net.is_tree()) {
    throw ValidationError("iks needs a tree network; use mst-iks for networks with cycles");
  }
  IksResult best;
  bool have = false;
  for (NodeIndex root = 0; root < net.size(); ++root) {
    options.deadline.check();
    RootLinearization lin = linearize_root(net, build_precedence_graph(net, root));
    const bool better = !have || lin.cost < best.cost ||
                        (lin.cost == best.cost && net.id(root) < net.id(best.root));
    if (better) {
      best.order = lin.order;
      best.cost = lin.cost;
      best.root = root;
      have = true;
    }
    if (options.keep_trace) best.per_root.push_back(std::move(lin));
  }
  return best;
}

std::string format_trace(const TensorNetwork& net, const IksResult& result) {
  std::ostringstream out;
  for (const RootLinearization& lin : result.per_root) {
    out << "root " << net.id(lin.root) << " cost " << to_decimal(lin.cost) << '\n';
    out << dump_precedence_graph(net, build_precedence_graph(net, lin.root));
    for (const SequenceEntry& e : lin.chain) {
      out << "  (";
      for (std::size_t i = 0; i < e.members.size(); ++i) {
        out << (i ? " " : "") << net.id(e.members[i]);
      }
      out << ") T=" << to_string(e.multiplier) << " C=" << to_string(e.cost)
          << " rank=" << to_string(e.rank()) << '\n';
    }
    out << "  order";
    for (NodeIndex v : lin.order) out << ' ' << net.id(v);
    out << '\n';
  }
  out << "best root " << net.id(result.root) << " cost " << to_decimal(result.cost) << '\n';
  return out.str();
}

}  // namespace tnorder
