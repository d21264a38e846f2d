#include "matchcert/hunt.hpp"

#include <atomic>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "matchcert/mgf.hpp"

namespace matchcert {

std::uint64_t derive_graph_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<std::size_t> feasible_sizes(const HuntConfig& config) {
  std::vector<std::size_t> sizes;
  for (std::size_t n = config.n_min; n <= config.n_max; ++n) {
    if ((n * config.degree) % 2 != 0 || n < 2) continue;
    if (config.simple_only && config.degree >= n) continue;
    sizes.push_back(n);
  }
  return sizes;
}

void validate(const HuntConfig& config) {
  if (config.degree < 1) throw std::invalid_argument("hunt: degree must be at least 1");
  if (config.count < 1) throw std::invalid_argument("hunt: count must be at least 1");
  if (config.n_min > config.n_max) throw std::invalid_argument("hunt: min-n exceeds max-n");
  if (config.cap < 1) throw std::invalid_argument("hunt: cap must be at least 1");
  if (config.workers < 1) throw std::invalid_argument("hunt: workers must be at least 1");
  if (feasible_sizes(config).empty())
    throw std::invalid_argument("hunt: no vertex count in range admits a " +
                                std::to_string(config.degree) + "-regular graph");
}

namespace {

HuntRecord test_one(const HuntConfig& config, const std::vector<std::size_t>& sizes,
                    std::size_t index) {
  HuntRecord record;
  record.index = index;
  record.seed = derive_graph_seed(config.seed, index);
  // n comes from the low bits of the seed, the graph from the seed itself.
  record.n = sizes[record.seed % sizes.size()];
  try {
    const Multigraph g = random_regular_graph(record.n, config.degree, record.seed,
                                              config.simple_only, config.retry_budget);
    const VerificationReport report = conjecture_holds(g, config.cap);
    record.verdict = report.verdict;
    record.method = report.method;
    record.deficiency = report.deficiency;
    record.matchings_examined = report.matchings_examined;
    if (report.verdict == Verdict::counterexample) {
      // Re-check from the serialized payload before reporting it.
      record.mgf = serialize_mgf(g);
      const VerificationReport again = conjecture_holds(parse_mgf(record.mgf), config.cap);
      if (again.verdict != Verdict::counterexample) {
        record.verdict = Verdict::inconclusive;
        record.error = "counterexample did not re-verify from MGF";
        record.mgf.clear();
      }
    }
  } catch (const std::exception& e) {
    record.verdict = Verdict::inconclusive;
    record.error = e.what();
  }
  return record;
}

}  // namespace

HuntSummary hunt(const HuntConfig& config) {
  validate(config);
  const auto sizes = feasible_sizes(config);

  HuntSummary summary;
  summary.config = config;
  summary.records.resize(config.count);

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < config.count; i = next++)
      summary.records[i] = test_one(config, sizes, i);
  };
  const std::size_t threads = std::min(config.workers, config.count);
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
  }

  for (const auto& r : summary.records) {
    ++summary.graphs_tested;
    switch (r.verdict) {
      case Verdict::holds: ++summary.holds_count; break;
      case Verdict::counterexample: ++summary.counterexample_count; break;
      case Verdict::inconclusive: ++summary.inconclusive_count; break;
    }
  }
  return summary;
}

std::string format_summary(const HuntSummary& summary) {
  const auto& c = summary.config;
  std::ostringstream out;
  out << "hunt degree=" << c.degree << " min_n=" << c.n_min << " max_n=" << c.n_max
      << " count=" << c.count << " seed=" << c.seed << " simple=" << (c.simple_only ? "true" : "false")
      << " cap=" << c.cap << '\n';
  for (const auto& r : summary.records) {
    out << "graph index=" << r.index << " seed=" << r.seed << " n=" << r.n
        << " verdict=" << to_string(r.verdict) << " method=" << to_string(r.method)
        << " def=" << r.deficiency << " examined=" << r.matchings_examined;
    if (!r.error.empty()) out << " error=\"" << r.error << '"';
    out << '\n';
  }
  out << "summary tested=" << summary.graphs_tested << " holds=" << summary.holds_count
      << " counterexample=" << summary.counterexample_count
      << " inconclusive=" << summary.inconclusive_count << '\n';
  return out.str();
}

}  // namespace matchcert
