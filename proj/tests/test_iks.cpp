#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/brute_force.hpp"
#include "support/fixtures.hpp"
#include "tnorder/cost.hpp"
#include "tnorder/errors.hpp"
#include "tnorder/generator.hpp"
#include "tnorder/iks.hpp"

#include <random>

using namespace tnorder;
using namespace tnorder::testing;

namespace {

SequenceEntry synthetic(NodeIndex v, Rational multiplier, Rational cost) {
  return SequenceEntry{{v}, multiplier, cost};
}

SequenceEntry sequence_of(const PrecedenceGraph& pg, std::span<const NodeIndex> nodes) {
  SequenceEntry s = SequenceEntry::single(pg, nodes[0]);
  for (std::size_t i = 1; i < nodes.size(); ++i) s = concat(s, SequenceEntry::single(pg, nodes[i]));
  return s;
}

bool nondecreasing(const std::vector<SequenceEntry>& chain) {
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (!rank_leq(chain[i - 1], chain[i])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rank comparison on five rooted at T4") {
  const auto net = five_node_tree();
  const auto id = [&](std::string_view s) { return net.index_of(s); };
  const auto pg = build_precedence_graph(net, id("T4"));
  const auto t5 = SequenceEntry::single(pg, id("T5"));
  const auto t1 = SequenceEntry::single(pg, id("T1"));
  CHECK(t5.rank() == Rational(-1, 2));
  CHECK(t1.rank() == 0);
  CHECK(rank_leq(t5, t1));
  CHECK_FALSE(rank_leq(t1, t5));
  // Swapping the adjacent pair confirms T5 first is cheaper.
  const auto t5_first = evaluate_linear(net, net.indices_of({"T4", "T2", "T5", "T1", "T3"})).cost;
  const auto t1_first = evaluate_linear(net, net.indices_of({"T4", "T2", "T1", "T5", "T3"})).cost;
  CHECK(t5_first == 80);
  CHECK(t1_first == 85);
  CHECK(rank_leq(t5, t1) == (t5_first <= t1_first));

  const auto t3 = SequenceEntry::single(pg, id("T3"));
  const auto t2 = SequenceEntry::single(pg, id("T2"));
  CHECK(t3.rank() == Rational(-4, 5));
  CHECK(t2.rank() == Rational(-1, 3));
  for (const auto* e : {&t1, &t2, &t3, &t5}) CHECK(rank_leq(*e, *e));
}

TEST_CASE("rank decides the two-leaf example with p=2, q=3, r=4") {
  const int p = 2, q = 3, r = 4;
  CHECK(p * q * (r - 1) == 18);
  CHECK(r * (p - q) == -4);
  CHECK(p * q * r + q * r + r == 40);
  CHECK(p * q + p * r + r == 18);

  const auto net = rank_example_network();
  const auto id = [&](std::string_view s) { return net.index_of(s); };
  const auto pg = build_precedence_graph(net, id("T1"));
  const auto t2 = SequenceEntry::single(pg, id("T2"));
  const auto t4 = SequenceEntry::single(pg, id("T4"));
  CHECK_FALSE(rank_leq(t2, t4));
  CHECK(rank_leq(t4, t2));
  CHECK(evaluate_linear(net, net.indices_of({"T1", "T2", "T4", "T3"})).cost == 40);
  CHECK(evaluate_linear(net, net.indices_of({"T1", "T4", "T2", "T3"})).cost == 18);
  CHECK(iks_order(net).cost == brute_force_linear(net).cost);
}

TEST_CASE("normalization fuses a contradictory parent-child pair") {
  const auto net = five_node_tree();
  const auto id = [&](std::string_view s) { return net.index_of(s); };
  const auto pg = build_precedence_graph(net, id("T4"));
  const auto fused = normalize_chain({SequenceEntry::single(pg, id("T2")), SequenceEntry::single(pg, id("T5"))});
  REQUIRE(fused.size() == 1);
  CHECK(fused[0].members == net.indices_of({"T2", "T5"}));
  CHECK(fused[0].multiplier == Rational(1, 6));
  CHECK(fused[0].cost == Rational(7, 3));
  CHECK(fused[0].rank() == Rational(-5, 14));
  // The sequence calculus over a full order matches the evaluator.
  const auto order = net.indices_of({"T4", "T2", "T5", "T3", "T1"});
  const auto rest = std::vector<NodeIndex>(order.begin() + 1, order.end());
  CHECK(Rational(evaluate_linear(net, order).cost) ==
        pg.quantities(id("T4")).tensor_size * sequence_of(pg, rest).cost);
}

TEST_CASE("normalization leaves sorted chains alone") {
  std::vector<SequenceEntry> chain{synthetic(0, Rational(1, 2), 1), synthetic(1, 1, 1),
                                   synthetic(2, 3, 2)};
  const auto out = normalize_chain(chain);
  REQUIRE(out.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(out[i].members == chain[i].members);
}

TEST_CASE("normalization cascades through decreasing ranks") {
  // ranks 5, 1, 0
  std::vector<SequenceEntry> chain{synthetic(0, 6, 1), synthetic(1, 2, 1), synthetic(2, 1, 1)};
  CHECK(chain[0].rank() == 5);
  CHECK(chain[1].rank() == 1);
  CHECK(chain[2].rank() == 0);
  const auto out = normalize_chain(chain);
  REQUIRE(out.size() == 1);
  CHECK(out[0].members == std::vector<NodeIndex>{0, 1, 2});
  CHECK(out[0].multiplier == 12);
  CHECK(out[0].cost == 19);

  // Path R-A:1, A-B:2, B-C:3 has node ranks 1/2, 1/6, -2/3 below R.
  const auto path = TensorNetwork::from_specs({{"R"}, {"A"}, {"B"}, {"C"}},
                                              {{"R", "A", 1}, {"A", "B", 2}, {"B", "C", 3}});
  const auto pg = build_precedence_graph(path, 0);
  CHECK(SequenceEntry::single(pg, 1).rank() == Rational(1, 2));
  CHECK(SequenceEntry::single(pg, 2).rank() == Rational(1, 6));
  CHECK(SequenceEntry::single(pg, 3).rank() == Rational(-2, 3));
  const auto lin = linearize_root(path, pg);
  REQUIRE(lin.chain.size() == 1);
  CHECK(lin.chain[0].members == std::vector<NodeIndex>{1, 2, 3});
  CHECK(lin.cost == brute_force_linear(path, &pg).cost);
  CHECK(Rational(lin.cost) == pg.quantities(0).tensor_size * lin.chain[0].cost);
}

TEST_CASE("merging rank-sorted lists") {
  const auto net = five_node_tree();
  const auto id = [&](std::string_view s) { return net.index_of(s); };
  const auto pg = build_precedence_graph(net, id("T4"));
  const auto single = [&](std::string_view s) { return SequenceEntry::single(pg, id(s)); };

  const std::vector<SequenceEntry> one{single("T3"), single("T1")};
  const auto same = merge_children({one}, net);
  REQUIRE(same.size() == 2);
  CHECK(same[0].members == one[0].members);

  const auto t2t5 = concat(single("T2"), single("T5"));
  const auto merged = merge_children({{single("T3")}, {t2t5, single("T1")}}, net);
  REQUIRE(merged.size() == 3);
  CHECK(merged[0].members == net.indices_of({"T3"}));
  CHECK(merged[1].members == net.indices_of({"T2", "T5"}));
  CHECK(merged[2].members == net.indices_of({"T1"}));
  CHECK(nondecreasing(merged));

  // Equal ranks: smaller id first whichever list holds it.
  const auto a = SequenceEntry{{id("T5")}, Rational(1, 2), 1};
  const auto b = SequenceEntry{{id("T3")}, Rational(1, 2), 1};
  for (int trial = 0; trial < 2; ++trial) {
    const auto tied = trial == 0 ? merge_children({{a}, {b}}, net) : merge_children({{b}, {a}}, net);
    CHECK(tied[0].members.front() == id("T3"));
    CHECK(tied[1].members.front() == id("T5"));
  }
}

TEST_CASE("linearization per root") {
  const auto net = five_node_tree();
  const auto pg = build_precedence_graph(net, net.index_of("T4"));
  const auto lin = linearize_root(net, pg);
  CHECK(lin.order == net.indices_of({"T4", "T3", "T2", "T5", "T1"}));
  CHECK(lin.cost == 45);
  CHECK(brute_force_linear(net, &pg).cost == 45);
  REQUIRE(lin.chain.size() == 3);
  CHECK(lin.chain[1].members == net.indices_of({"T2", "T5"}));

  const auto two = two_node_network();
  const auto lin2 = linearize_root(two, build_precedence_graph(two, 0));
  CHECK(lin2.order == LinearOrder{0, 1});
  CHECK(lin2.cost == 7);

  const auto mc = matrix_chain_network();
  const auto lin3 = linearize_root(mc, build_precedence_graph(mc, mc.index_of("A")));
  CHECK(lin3.order == mc.indices_of({"A", "B", "C"}));
  CHECK(lin3.cost == 16000);
}

TEST_CASE("iks_order golden values") {
  const auto five = five_node_tree();
  const auto r = iks_order(five);
  CHECK(r.cost == 45);
  CHECK(evaluate_linear(five, r.order).cost == 45);
  CHECK(check_outer_product_free(five, r.order));

  CHECK(iks_order(matrix_chain_network()).cost == 16000);

  const auto star = TensorNetwork::from_specs({{"s"}, {"a"}, {"b"}, {"c"}},
                                              {{"s", "a", 2}, {"s", "b", 3}, {"s", "c", 4}});
  CHECK(iks_order(star).cost == 32);
  CHECK(brute_force_linear(star).cost == 32);

  const auto single = TensorNetwork::from_specs({{"X"}}, {});
  CHECK(iks_order(single).order == LinearOrder{0});
  CHECK(iks_order(single).cost == 0);
}

TEST_CASE("equal-cost roots resolve to the smallest id") {
  const auto net = TensorNetwork::from_specs({{"v"}, {"u"}}, {{"v", "u", 7}});
  const auto r = iks_order(net);
  CHECK(net.id(r.root) == "u");
  CHECK(r.order == net.indices_of({"u", "v"}));
}

TEST_CASE("iks rejects networks with cycles and honours deadlines") {
  const auto tri = TensorNetwork::from_specs({{"a"}, {"b"}, {"c"}},
                                             {{"a", "b", 2}, {"b", "c", 3}, {"a", "c", 4}});
  CHECK_THROWS_AS(iks_order(tri), ValidationError);
  IksOptions expired{Deadline::after(std::chrono::milliseconds(-1)), false};
  CHECK_THROWS_AS(iks_order(five_node_tree(), expired), TimeoutError);
}

TEST_CASE("sequence calculus reproduces linear costs") {
  std::mt19937_64 rng(13);
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const std::size_t n = 2 + seed % 9;
    const auto net = random_network(n, 0, seed);
    const auto pg = build_precedence_graph(net, seed % n);
    const auto order = random_topological_order(pg, rng);
    const std::vector<NodeIndex> rest(order.begin() + 1, order.end());
    const auto seq = sequence_of(pg, rest);
    CHECK(Rational(evaluate_linear(net, order).cost) == pg.quantities(pg.root()).tensor_size * seq.cost);
    // Concatenation is associative.
    if (rest.size() >= 3) {
      const auto a = SequenceEntry::single(pg, rest[0]);
      const auto b = SequenceEntry::single(pg, rest[1]);
      const auto c = sequence_of(pg, std::span(rest).subspan(2));
      const auto left = concat(concat(a, b), c);
      const auto right = concat(a, concat(b, c));
      CHECK(left.multiplier == right.multiplier);
      CHECK(left.cost == right.cost);
    }
  }
}

TEST_CASE("adjacent sequence interchange agrees with rank comparison") {
  std::mt19937_64 rng(17);
  std::size_t checked = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const std::size_t n = 3 + seed % 7;
    const auto net = generate_random_tree_network(n, seed, 1, 6);
    const auto pg = build_precedence_graph(net, seed % n);
    const auto order = random_topological_order(pg, rng);
    // A = order[0, i), U = order[i, j), V = order[j, k), B = order[k, n).
    const std::size_t i = std::uniform_int_distribution<std::size_t>(1, n - 2)(rng);
    const std::size_t j = std::uniform_int_distribution<std::size_t>(i + 1, n - 1)(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(j + 1, n)(rng);
    LinearOrder swapped(order.begin(), order.begin() + static_cast<long>(i));
    swapped.insert(swapped.end(), order.begin() + static_cast<long>(j), order.begin() + static_cast<long>(k));
    swapped.insert(swapped.end(), order.begin() + static_cast<long>(i), order.begin() + static_cast<long>(j));
    swapped.insert(swapped.end(), order.begin() + static_cast<long>(k), order.end());
    if (!respects_precedence(pg, swapped)) continue;
    const auto u = sequence_of(pg, std::span(order).subspan(i, j - i));
    const auto v = sequence_of(pg, std::span(order).subspan(j, k - j));
    CHECK((evaluate_linear(net, order).cost <= evaluate_linear(net, swapped).cost) == rank_leq(u, v));
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("iks matches exhaustive search on small random trees") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const std::size_t n = 2 + seed % 7;
    const auto net = random_network(n, 0, seed);
    const auto r = iks_order(net, IksOptions{{}, true});
    CHECK(r.cost == brute_force_linear(net).cost);
    CHECK(check_outer_product_free(net, r.order));
    CHECK(r.cost == evaluate_linear(net, r.order).cost);
    for (const auto& lin : r.per_root) {
      const auto pg = build_precedence_graph(net, lin.root);
      CHECK(lin.cost == brute_force_linear(net, &pg).cost);
      CHECK(respects_precedence(pg, lin.order));
      CHECK(nondecreasing(lin.chain));
      // Normalization is idempotent on a finished linearization.
      const auto again = normalize_chain(lin.chain);
      CHECK(again.size() == lin.chain.size());
    }
  }
}

TEST_CASE("repeated runs give identical orders") {
  const auto net = generate_random_tree_network(40, 99);
  const auto first = iks_order(net);
  for (int i = 0; i < 3; ++i) CHECK(iks_order(net).order == first.order);
}

TEST_CASE("trace lists each rooting") {
  const auto net = five_node_tree();
  const auto text = format_trace(net, iks_order(net, IksOptions{{}, true}));
  CHECK(text.find("root T4 cost 45\n") != std::string::npos);
  CHECK(text.find("  (T2 T5) T=1/6 C=7/3 rank=-5/14\n") != std::string::npos);
  CHECK(text.find("best root") != std::string::npos);
}
