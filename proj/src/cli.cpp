#include "tnorder/cli.hpp"

#include "tnorder/benchmark.hpp"
#include "tnorder/cost.hpp"
#include "tnorder/errors.hpp"
#include "tnorder/generator.hpp"
#include "tnorder/heuristics.hpp"
#include "tnorder/iks.hpp"
#include "tnorder/oracles.hpp"
#include "tnorder/precedence.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace tnorder {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path);
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    write_file(path, content);
  }
}

struct GenArgs {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t dim_lo = 2;
  std::uint64_t dim_hi = 10;
  std::string output;
};

struct OrderArgs {
  std::string algorithm = "iks";
  std::string network;
  std::string output;
  std::string start_order;
  std::string dump_root;
  bool trace = false;
  std::int64_t timeout_ms = 0;
};

struct CostArgs {
  std::string network;
  std::string plan;
};

struct BenchArgs {
  std::string sizes = "5:64";
  std::size_t instances = 100;
  std::int64_t timeout_ms = 10000;
  std::vector<std::string> algorithms{"iks", "dp-linear"};
  std::uint64_t seed = 1;
  std::uint64_t dim_lo = 2;
  std::uint64_t dim_hi = 10;
  std::size_t workers = 1;
  bool keep_going = false;
  std::string output;
  std::string summary;
  std::string chart_prefix;
};

int run_order(const OrderArgs& a, std::ostream& out, std::ostream& err) {
  const TensorNetwork net = parse_network(read_file(a.network));
  const Deadline deadline =
      a.timeout_ms > 0 ? Deadline::after(std::chrono::milliseconds(a.timeout_ms)) : Deadline();

  if (!a.dump_root.empty()) {
    err << dump_precedence_graph(net, build_precedence_graph(net, net.index_of(a.dump_root)));
  }

  ContractionPlan plan;
  Cost cost;
  if (a.algorithm == "iks") {
    IksResult r = iks_order(net, IksOptions{deadline, a.trace});
    if (a.trace) err << format_trace(net, r);
    plan = std::move(r.order);
    cost = std::move(r.cost);
  } else if (a.algorithm == "dp-linear") {
    LinearSolution r = dp_linear_optimal(net, deadline);
    plan = std::move(r.order);
    cost = std::move(r.cost);
  } else if (a.algorithm == "dp-general") {
    TreeSolution r = dp_general_optimal(net, deadline);
    plan = std::move(r.tree);
    cost = std::move(r.cost);
  } else if (a.algorithm == "mst-iks") {
    ArbitrarySolution r = order_arbitrary(net, IksOptions{deadline, false});
    if (a.trace) err << "spanning-tree estimate " << to_decimal(r.tree_estimate) << '\n';
    plan = std::move(r.order);
    cost = std::move(r.cost);
  } else if (a.algorithm == "lin-dp") {
    LinearOrder start;
    if (!a.start_order.empty()) {
      ContractionPlan given = parse_plan(net, read_file(a.start_order));
      if (!std::holds_alternative<LinearOrder>(given)) {
        throw ValidationError("--order must name a linear plan");
      }
      start = std::get<LinearOrder>(std::move(given));
    } else if (net.is_tree()) {
      start = iks_order(net, IksOptions{deadline, false}).order;
    } else {
      start = order_arbitrary(net, IksOptions{deadline, false}).order;
    }
    TreeSolution r = linearized_dp(net, start);
    plan = std::move(r.tree);
    cost = std::move(r.cost);
  } else {
    throw ValidationError("unknown algorithm '" + a.algorithm + "'");
  }
  emit(a.output, plan_to_json(net, plan), out);
  out << "cost " << to_decimal(cost) << '\n';
  return kExitOk;
}

int run_cost(const CostArgs& a, std::ostream& out) {
  const TensorNetwork net = parse_network(read_file(a.network));
  const ContractionPlan plan = parse_plan(net, read_file(a.plan));
  const Evaluation e = evaluate_plan(net, plan);
  out << "cost " << to_decimal(e.cost) << '\n';
  out << "outer_product_free " << (e.outer_product_free ? "true" : "false") << '\n';
  return kExitOk;
}

int run_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  BenchConfig config;
  config.sizes = parse_size_list(a.sizes);
  config.instances = a.instances;
  config.timeout = std::chrono::milliseconds(a.timeout_ms);
  config.algorithms.clear();
  for (const auto& name : a.algorithms) config.algorithms.push_back(parse_bench_algorithm(name));
  config.base_seed = a.seed;
  config.dim_lo = a.dim_lo;
  config.dim_hi = a.dim_hi;
  config.workers = a.workers;
  config.skip_after_timeout = !a.keep_going;

  const BenchReport report = run_benchmark(config, [&](const SizeSummary& s) {
    err << s.algorithm << " n=" << s.n << " runs=" << s.runs << " timeouts=" << s.timeouts
        << " skipped=" << s.skipped;
    if (s.avg_wall_time_us) err << " avg_us=" << *s.avg_wall_time_us;
    err << '\n';
  });
  emit(a.output, records_to_csv(report.records), out);
  if (!a.summary.empty()) write_file(a.summary, summary_to_csv(report.summary));
  if (!a.chart_prefix.empty()) {
    write_file(a.chart_prefix + "_small.svg",
               render_svg_chart(report.summary, "small tree tensor networks", 20));
    write_file(a.chart_prefix + "_large.svg",
               render_svg_chart(report.summary, "large tree tensor networks", SIZE_MAX));
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Contraction-order optimizer for tensor networks", "tnorder"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random tree tensor network");
  gen_cmd->add_option("--n", gen.n, "Number of tensors")->required();
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->required();
  gen_cmd->add_option("--dim-lo", gen.dim_lo, "Smallest leg dimension");
  gen_cmd->add_option("--dim-hi", gen.dim_hi, "Largest leg dimension");
  gen_cmd->add_option("-o,--output", gen.output, "Network file (default: stdout)");

  OrderArgs order;
  auto* order_cmd = app.add_subcommand("order", "Compute a contraction order");
  order_cmd->add_option("--algorithm", order.algorithm, "iks|dp-linear|dp-general|lin-dp|mst-iks")
      ->check(CLI::IsMember({"iks", "dp-linear", "dp-general", "lin-dp", "mst-iks"}));
  order_cmd->add_option("--network", order.network, "Network file")->required();
  order_cmd->add_option("-o,--output", order.output, "Plan file (default: stdout)");
  order_cmd->add_option("--order", order.start_order, "Linear plan seeding lin-dp");
  order_cmd->add_flag("--trace", order.trace, "Print per-root linearizations to stderr");
  order_cmd->add_option("--dump-precedence", order.dump_root,
                        "Print the precedence graph rooted at this node to stderr");
  order_cmd->add_option("--timeout-ms", order.timeout_ms, "Abort after this many milliseconds");

  CostArgs cost;
  auto* cost_cmd = app.add_subcommand("cost", "Evaluate a plan exactly");
  cost_cmd->add_option("--network", cost.network, "Network file")->required();
  cost_cmd->add_option("--plan", cost.plan, "Plan file")->required();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time iks against dp-linear on random trees");
  bench_cmd->add_option("--sizes", bench.sizes, "lo:hi[:step] or comma list");
  bench_cmd->add_option("--instances", bench.instances, "Instances per size");
  bench_cmd->add_option("--timeout-ms", bench.timeout_ms, "Per-run timeout");
  bench_cmd->add_option("--algorithms", bench.algorithms, "Comma-separated algorithms")
      ->delimiter(',');
  bench_cmd->add_option("--seed", bench.seed, "Base seed");
  bench_cmd->add_option("--dim-lo", bench.dim_lo, "Smallest leg dimension");
  bench_cmd->add_option("--dim-hi", bench.dim_hi, "Largest leg dimension");
  bench_cmd->add_option("--workers", bench.workers, "Concurrent runs");
  bench_cmd->add_flag("--keep-going", bench.keep_going,
                      "Keep running an algorithm after a size where every run timed out");
  bench_cmd->add_option("-o,--output", bench.output, "Records CSV (default: stdout)");
  bench_cmd->add_option("--summary", bench.summary, "Per-size averages CSV");
  bench_cmd->add_option("--chart-prefix", bench.chart_prefix,
                        "Write <prefix>_small.svg and <prefix>_large.svg");

  std::vector<std::string> storage{"tnorder"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitFailure;
  }

  try {
    if (gen_cmd->parsed()) {
      const TensorNetwork net = generate_random_tree_network(gen.n, gen.seed, gen.dim_lo, gen.dim_hi);
      emit(gen.output, network_to_json(net), out);
      return kExitOk;
    }
    if (order_cmd->parsed()) return run_order(order, out, err);
    if (cost_cmd->parsed()) return run_cost(cost, out);
    if (bench_cmd->parsed()) return run_bench(bench, out, err);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const SizeBoundError& e) {
    err << "error: " << e.what() << '\n';
    return kExitSizeBound;
  } catch (const TimeoutError& e) {
    err << "error: " << e.what() << '\n';
    return kExitTimeout;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace tnorder
