#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "matchcert/multigraph.hpp"
#include "matchcert/verify.hpp"

namespace matchcert {

inline constexpr std::size_t kDefaultRetryBudget = 10'000;

/// Configuration-model sample of a degree-regular multigraph on n vertices.
///
/// Stubs are paired one at a time, each with a uniformly chosen remaining stub
/// that keeps the graph loop-free (and, with simple_only, free of parallel
/// edges); a dead end restarts the whole pairing. Throws std::invalid_argument
/// for infeasible parameters and std::runtime_error once `retry_budget`
/// restarts are used up. Deterministic for fixed arguments.
Multigraph random_regular_graph(std::size_t n, std::size_t degree, std::uint64_t seed,
                                bool simple_only = true,
                                std::size_t retry_budget = kDefaultRetryBudget);

struct HuntConfig {
  std::size_t degree = 4;
  std::size_t n_min = 10;
  std::size_t n_max = 14;
  std::size_t count = 100;
  std::uint64_t seed = 0;
  bool simple_only = true;
  std::uint64_t cap = kDefaultCap;
  std::size_t retry_budget = kDefaultRetryBudget;
  /// Threads used to test graphs. Results do not depend on it.
  std::size_t workers = 1;
};

/// Throws std::invalid_argument if the config admits no graph.
void validate(const HuntConfig& config);

/// Vertex counts in [n_min, n_max] for which a graph can be sampled.
std::vector<std::size_t> feasible_sizes(const HuntConfig& config);

/// splitmix64 finaliser applied to seed + (index + 1) * golden ratio.
std::uint64_t derive_graph_seed(std::uint64_t seed, std::uint64_t index) noexcept;

struct HuntRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  Verdict verdict = Verdict::inconclusive;
  Method method = Method::enumeration;
  std::size_t deficiency = 0;
  std::uint64_t matchings_examined = 0;
  std::string mgf;    // set for counterexamples
  std::string error;  // set when sampling or verification threw
};

struct HuntSummary {
  HuntConfig config;
  std::size_t graphs_tested = 0;
  std::size_t holds_count = 0;
  std::size_t counterexample_count = 0;
  std::size_t inconclusive_count = 0;
  std::vector<HuntRecord> records;  // by index
};

/// Tests `count` random graphs with conjecture_holds. Each graph depends only
/// on (config, index), so the summary is identical for any worker count.
HuntSummary hunt(const HuntConfig& config);

/// Line-oriented report: a config line, one line per graph, a totals line.
/// Worker count is deliberately not printed.
std::string format_summary(const HuntSummary& summary);

}  // namespace matchcert
