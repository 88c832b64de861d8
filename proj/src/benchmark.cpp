#include "tnorder/benchmark.hpp"

#include "tnorder/deadline.hpp"
#include "tnorder/errors.hpp"
#include "tnorder/generator.hpp"
#include "tnorder/iks.hpp"
#include "tnorder/oracles.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace tnorder {

namespace {

enum class Outcome { kDone, kTimedOut, kSkipped };

struct Task {
  BenchAlgorithm algorithm;
  std::size_t instance;
  Outcome outcome = Outcome::kSkipped;
  BenchRecord record;
};

void run_task(const BenchConfig& config, std::size_t n, Task& task) {
  const std::uint64_t seed = instance_seed(config.base_seed, n, task.instance);
  const TensorNetwork net = generate_random_tree_network(n, seed, config.dim_lo, config.dim_hi);
  BenchRecord& rec = task.record;
  rec.algorithm = std::string(algorithm_name(task.algorithm));
  rec.n = n;
  rec.instance = task.instance;
  rec.seed = seed;

  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const Deadline deadline = Deadline::after(config.timeout);
  std::optional<Cost> cost;
  try {
    if (task.algorithm == BenchAlgorithm::kIks) {
      cost = iks_order(net, IksOptions{deadline, false}).cost;
    } else {
      cost = dp_linear_optimal(net, deadline).cost;
    }
  } catch (const TimeoutError&) {
  } catch (const SizeBoundError&) {
    task.outcome = Outcome::kSkipped;
    return;
  }
  const auto elapsed = Clock::now() - start;
  rec.wall_time_us = std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count();
  if (!cost || elapsed > config.timeout) {
    rec.timed_out = true;
    rec.cost.reset();
    task.outcome = Outcome::kTimedOut;
  } else {
    rec.cost = std::move(cost);
    task.outcome = Outcome::kDone;
  }
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.emplace_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
T parse_unsigned(std::string_view text, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ValidationError(std::string("invalid ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string_view algorithm_name(BenchAlgorithm algorithm) {
  return algorithm == BenchAlgorithm::kIks ? "iks" : "dp-linear";
}

BenchAlgorithm parse_bench_algorithm(std::string_view name) {
  if (name == "iks") return BenchAlgorithm::kIks;
  if (name == "dp-linear") return BenchAlgorithm::kDpLinear;
  throw ValidationError("benchmark algorithm must be iks or dp-linear, got '" +
                        std::string(name) + "'");
}

std::uint64_t instance_seed(std::uint64_t base_seed, std::size_t n, std::size_t instance) {
  return base_seed * 1000003u + static_cast<std::uint64_t>(n) * 65536u + instance;
}

BenchReport run_benchmark(const BenchConfig& config, const BenchProgress& progress) {
  BenchReport report;
  std::set<BenchAlgorithm> given_up;
  const std::size_t workers = std::max<std::size_t>(1, config.workers);

  for (std::size_t n : config.sizes) {
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < config.instances; ++i) {
      for (BenchAlgorithm a : config.algorithms) tasks.push_back(Task{a, i, Outcome::kSkipped, {}});
    }
    std::vector<bool> active(tasks.size());
    for (std::size_t t = 0; t < tasks.size(); ++t) active[t] = !given_up.count(tasks[t].algorithm);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t t = next++; t < tasks.size(); t = next++) {
        if (active[t]) run_task(config, n, tasks[t]);
      }
    };
    if (workers == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    }

    for (BenchAlgorithm a : config.algorithms) {
      SizeSummary s;
      s.algorithm = std::string(algorithm_name(a));
      s.n = n;
      double total = 0;
      std::size_t finished = 0;
      for (const Task& task : tasks) {
        if (task.algorithm != a) continue;
        switch (task.outcome) {
          case Outcome::kSkipped:
            ++s.skipped;
            break;
          case Outcome::kTimedOut:
            ++s.runs;
            ++s.timeouts;
            break;
          case Outcome::kDone:
            ++s.runs;
            ++finished;
            total += static_cast<double>(task.record.wall_time_us);
            break;
        }
      }
      if (finished > 0) s.avg_wall_time_us = total / static_cast<double>(finished);
      if (config.skip_after_timeout && finished == 0 && config.instances > 0) given_up.insert(a);
      if (progress) progress(s);
      report.summary.push_back(std::move(s));
    }
    for (Task& task : tasks) {
      if (task.outcome != Outcome::kSkipped) report.records.push_back(std::move(task.record));
    }
  }
  return report;
}

std::vector<std::size_t> parse_size_list(std::string_view text) {
  std::vector<std::size_t> out;
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() < 2 || parts.size() > 3) throw ValidationError("size range must be lo:hi[:step]");
    const auto lo = parse_unsigned<std::size_t>(parts[0], "size");
    const auto hi = parse_unsigned<std::size_t>(parts[1], "size");
    const auto step = parts.size() == 3 ? parse_unsigned<std::size_t>(parts[2], "step") : 1;
    if (lo > hi || step == 0) throw ValidationError("size range needs lo <= hi and step >= 1");
    for (std::size_t n = lo; n <= hi; n += step) out.push_back(n);
  } else {
    for (const auto& part : split(text, ',')) out.push_back(parse_unsigned<std::size_t>(part, "size"));
  }
  for (std::size_t n : out) {
    if (n < 2) throw ValidationError("benchmark sizes must be >= 2");
  }
  return out;
}

std::string records_to_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << kBenchCsvHeader << '\n';
  for (const BenchRecord& r : records) {
    out << r.algorithm << ',' << r.n << ',' << r.instance << ',' << r.seed << ','
        << (r.cost ? to_decimal(*r.cost) : "") << ',' << r.wall_time_us << ','
        << (r.timed_out ? 1 : 0) << '\n';
  }
  return out.str();
}

std::vector<BenchRecord> parse_records_csv(std::string_view text) {
  std::vector<BenchRecord> out;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kBenchCsvHeader) {
    throw ValidationError("benchmark CSV: unexpected header");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 7) throw ValidationError("benchmark CSV: expected 7 fields in '" + line + "'");
    BenchRecord r;
    r.algorithm = f[0];
    r.n = parse_unsigned<std::size_t>(f[1], "n");
    r.instance = parse_unsigned<std::size_t>(f[2], "instance");
    r.seed = parse_unsigned<std::uint64_t>(f[3], "seed");
    if (!f[4].empty()) r.cost = parse_decimal(f[4]);
    r.wall_time_us = parse_unsigned<std::int64_t>(f[5], "wall_time_us");
    if (f[6] != "0" && f[6] != "1") throw ValidationError("benchmark CSV: timed_out must be 0 or 1");
    r.timed_out = f[6] == "1";
    if (r.timed_out == r.cost.has_value()) {
      throw ValidationError("benchmark CSV: cost must be present iff the run did not time out");
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string summary_to_csv(const std::vector<SizeSummary>& summary) {
  std::ostringstream out;
  out << "algorithm,n,runs,timeouts,skipped,avg_wall_time_us\n";
  out << std::fixed << std::setprecision(1);
  for (const SizeSummary& s : summary) {
    out << s.algorithm << ',' << s.n << ',' << s.runs << ',' << s.timeouts << ',' << s.skipped
        << ',';
    if (s.avg_wall_time_us) out << *s.avg_wall_time_us;
    out << '\n';
  }
  return out.str();
}

std::string render_svg_chart(const std::vector<SizeSummary>& summary, std::string_view title,
                             std::size_t max_n) {
  constexpr double kWidth = 640, kHeight = 400, kLeft = 70, kRight = 140, kTop = 40, kBottom = 50;
  std::map<std::string, std::vector<std::pair<double, double>>> series;
  double n_lo = 1e300, n_hi = -1e300, y_lo = 1e300, y_hi = -1e300;
  for (const SizeSummary& s : summary) {
    if (s.n > max_n || !s.avg_wall_time_us) continue;
    const double y = std::log10(std::max(*s.avg_wall_time_us, 1.0));
    series[s.algorithm].emplace_back(static_cast<double>(s.n), y);
    n_lo = std::min(n_lo, static_cast<double>(s.n));
    n_hi = std::max(n_hi, static_cast<double>(s.n));
    y_lo = std::min(y_lo, std::floor(y));
    y_hi = std::max(y_hi, std::ceil(y));
  }
  if (series.empty()) {
    n_lo = 0, n_hi = 1, y_lo = 0, y_hi = 1;
  }
  if (n_hi <= n_lo) n_hi = n_lo + 1;
  if (y_hi <= y_lo) y_hi = y_lo + 1;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double n) { return kLeft + (n - n_lo) / (n_hi - n_lo) * plot_w; };
  auto py = [&](double y) { return kTop + (y_hi - y) / (y_hi - y_lo) * plot_h; };

  static constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  std::ostringstream out;
  out << std::fixed << std::setprecision(1);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"20\" text-anchor=\"middle\">" << title << "</text>\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w
      << "\" y2=\"" << kTop + plot_h << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
      << kTop + plot_h << "\" stroke=\"black\"/>\n";
  for (double y = y_lo; y <= y_hi; y += 1) {
    out << "<text x=\"" << kLeft - 6 << "\" y=\"" << py(y) + 4 << "\" text-anchor=\"end\">1e"
        << static_cast<int>(y) << "</text>\n";
  }
  const double n_step = std::max(1.0, std::round((n_hi - n_lo) / 8));
  for (double n = n_lo; n <= n_hi; n += n_step) {
    out << "<text x=\"" << px(n) << "\" y=\"" << kTop + plot_h + 16
        << "\" text-anchor=\"middle\">" << static_cast<long>(n) << "</text>\n";
  }
  out << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 10
      << "\" text-anchor=\"middle\">network size n</text>\n";
  out << "<text x=\"16\" y=\"" << kTop + plot_h / 2 << "\" transform=\"rotate(-90 16 "
      << kTop + plot_h / 2 << ")\" text-anchor=\"middle\">average time [us]</text>\n";
  std::size_t k = 0;
  for (const auto& [name, points] : series) {
    const char* color = kColors[k % 4];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (const auto& [n, y] : points) out << px(n) << ',' << py(y) << ' ';
    out << "\"/>\n";
    const double ly = kTop + 20 + 18 * static_cast<double>(k);
    out << "<line x1=\"" << kLeft + plot_w + 15 << "\" y1=\"" << ly << "\" x2=\""
        << kLeft + plot_w + 35 << "\" y2=\"" << ly << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << kLeft + plot_w + 40 << "\" y=\"" << ly + 4 << "\">" << name
        << "</text>\n";
    ++k;
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace tnorder
