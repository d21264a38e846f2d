#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "matchcert/hunt.hpp"

namespace matchcert {

namespace {

// std::uniform_int_distribution is implementation-defined; this keeps samples
// identical across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

}  // namespace

Multigraph random_regular_graph(std::size_t n, std::size_t degree, std::uint64_t seed,
                                bool simple_only, std::size_t retry_budget) {
  if ((n * degree) % 2 != 0)
    throw std::invalid_argument("n * degree must be even (n=" + std::to_string(n) +
                                ", degree=" + std::to_string(degree) + ")");
  if (degree > 0 && n < 2) throw std::invalid_argument("a loop-free graph needs n >= 2");
  if (simple_only && degree >= n && degree > 0)
    throw std::invalid_argument("a simple graph needs degree < n");

  std::mt19937_64 rng(seed);
  std::vector<VertexId> stubs;
  stubs.reserve(n * degree);

  for (std::size_t attempt = 0; attempt < retry_budget; ++attempt) {
    stubs.clear();
    for (VertexId v = 0; v < n; ++v) stubs.insert(stubs.end(), degree, v);

    Multigraph g(n);
    bool dead_end = false;
    std::vector<std::size_t> candidates;
    while (!stubs.empty() && !dead_end) {
      const std::size_t first = uniform_below(rng, stubs.size());
      const VertexId u = stubs[first];
      stubs[first] = stubs.back();
      stubs.pop_back();

      candidates.clear();
      for (std::size_t i = 0; i < stubs.size(); ++i) {
        const VertexId v = stubs[i];
        if (v == u || (simple_only && g.adjacent(u, v))) continue;
        candidates.push_back(i);
      }
      if (candidates.empty()) {
        dead_end = true;
        break;
      }
      const std::size_t pick = candidates[uniform_below(rng, candidates.size())];
      const VertexId v = stubs[pick];
      stubs[pick] = stubs.back();
      stubs.pop_back();
      g.add_edges(u, v);
    }
    if (!dead_end) return g;
  }
  throw std::runtime_error("random_regular_graph: retry budget of " + std::to_string(retry_budget) +
                           " exhausted");
}

}  // namespace matchcert
