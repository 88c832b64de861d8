#pragma once

#include "tnorder/numeric.hpp"

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tnorder {

enum class BenchAlgorithm { kIks, kDpLinear };

std::string_view algorithm_name(BenchAlgorithm algorithm);
// "iks" or "dp-linear"; throws ValidationError otherwise.
BenchAlgorithm parse_bench_algorithm(std::string_view name);

struct BenchConfig {
  std::vector<std::size_t> sizes;
  std::size_t instances = 100;
  std::chrono::milliseconds timeout{10000};
  std::vector<BenchAlgorithm> algorithms{BenchAlgorithm::kIks, BenchAlgorithm::kDpLinear};
  std::uint64_t base_seed = 1;
  std::uint64_t dim_lo = 2;
  std::uint64_t dim_hi = 10;
  std::size_t workers = 1;
  // Once every instance of a size timed out, larger sizes are not run for
  // that algorithm (they are counted as skipped in the summary).
  bool skip_after_timeout = true;
};

// Seed of generated instance `instance` at size `n`; shared by all algorithms.
std::uint64_t instance_seed(std::uint64_t base_seed, std::size_t n, std::size_t instance);

struct BenchRecord {
  std::string algorithm;
  std::size_t n = 0;
  std::size_t instance = 0;
  std::uint64_t seed = 0;
  std::optional<Cost> cost;  // absent iff timed_out
  std::int64_t wall_time_us = 0;
  bool timed_out = false;

  bool operator==(const BenchRecord&) const = default;
};

struct SizeSummary {
  std::string algorithm;
  std::size_t n = 0;
  std::size_t runs = 0;
  std::size_t timeouts = 0;
  std::size_t skipped = 0;
  // Mean over runs that finished within the timeout.
  std::optional<double> avg_wall_time_us;
};

struct BenchReport {
  std::vector<BenchRecord> records;  // ordered by (n, instance, algorithm)
  std::vector<SizeSummary> summary;  // ordered by (n, algorithm)
};

using BenchProgress = std::function<void(const SizeSummary&)>;

// Timing covers the ordering call only; instance generation is excluded.
BenchReport run_benchmark(const BenchConfig& config, const BenchProgress& progress = {});

// "5:64" (inclusive range), "5:64:4" (with step) or "5,8,13".
std::vector<std::size_t> parse_size_list(std::string_view text);

inline constexpr std::string_view kBenchCsvHeader =
    "algorithm,n,instance,seed,cost,wall_time_us,timed_out";

std::string records_to_csv(const std::vector<BenchRecord>& records);
std::vector<BenchRecord> parse_records_csv(std::string_view text);
std::string summary_to_csv(const std::vector<SizeSummary>& summary);

// Line chart of average time (log scale) against n, for sizes <= max_n.
std::string render_svg_chart(const std::vector<SizeSummary>& summary, std::string_view title,
                             std::size_t max_n);

}  // namespace tnorder
