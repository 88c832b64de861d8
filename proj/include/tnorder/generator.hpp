#pragma once

#include "tnorder/network.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tnorder {

// Labeled tree on n nodes decoded from a Prüfer sequence (n >= 2, length
// n - 2, entries < n). Edges come out in decoding order.
std::vector<std::pair<NodeIndex, NodeIndex>> decode_pruefer(const std::vector<NodeIndex>& sequence);

// Uniformly random labeled tree on nodes T1..Tn with edge sizes drawn
// uniformly from [dim_lo, dim_hi] and open multipliers 1. Fully determined by
// the seed. Throws ValidationError on n < 2 or bad bounds.
TensorNetwork generate_random_tree_network(std::size_t n, std::uint64_t seed,
                                           std::uint64_t dim_lo = 2, std::uint64_t dim_hi = 10);

}  // namespace tnorder
