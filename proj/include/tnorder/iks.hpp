#pragma once

#include "tnorder/deadline.hpp"
#include "tnorder/network.hpp"
#include "tnorder/plan.hpp"
#include "tnorder/precedence.hpp"

#include <string>
#include <vector>

namespace tnorder {

// A run of tensors contracted consecutively into the prefix tensor. For a
// prefix of size P, appending the run costs P * cost and leaves a prefix of
// size P * multiplier. Both quantities are independent of the prefix as long
// as every member's parent is contracted before the member.
struct SequenceEntry {
  std::vector<NodeIndex> members;
  Rational multiplier;  // product of t(v) over members
  Rational cost;        // C(S1 S2) = C(S1) + T(S1) * C(S2)

  static SequenceEntry single(const PrecedenceGraph& pg, NodeIndex v);

  // (multiplier - 1) / cost; for display only, comparisons go through rank_leq.
  Rational rank() const;
};

SequenceEntry concat(const SequenceEntry& first, const SequenceEntry& second);

// rank(u) <= rank(v), evaluated as (T_u - 1) * C_v <= (T_v - 1) * C_u.
// Sound because C is always positive.
bool rank_leq(const SequenceEntry& u, const SequenceEntry& v);

// `chain` lists entries that must appear in this order. Fuses adjacent pairs
// whose ranks decrease until the ranks are nondecreasing.
std::vector<SequenceEntry> normalize_chain(std::vector<SequenceEntry> chain);

// k-way merge of rank-sorted lists through a min-heap. Equal ranks go to the
// entry whose first member has the lexicographically smaller id.
std::vector<SequenceEntry> merge_children(std::vector<std::vector<SequenceEntry>> lists,
                                          const TensorNetwork& net);

struct RootLinearization {
  NodeIndex root = 0;
  LinearOrder order;
  Cost cost;
  // Ranked sequence after the root, before expansion of compound entries.
  std::vector<SequenceEntry> chain;
};

// Cost-minimal order among those respecting the precedence graph.
RootLinearization linearize_root(const TensorNetwork& net, const PrecedenceGraph& pg);

struct IksOptions {
  Deadline deadline;
  bool keep_trace = false;
};

struct IksResult {
  LinearOrder order;
  Cost cost;
  NodeIndex root = 0;
  std::vector<RootLinearization> per_root;  // filled when keep_trace is set
};

// Optimal linear, outer-product-free order of a tree network. Equal-cost
// rootings resolve to the smallest root id. Throws ValidationError on non-tree
// input and TimeoutError when the deadline passes between rootings.
IksResult iks_order(const TensorNetwork& net, const IksOptions& options = {});

std::string format_trace(const TensorNetwork& net, const IksResult& result);

}  // namespace tnorder
