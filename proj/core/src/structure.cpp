#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "blossom.hpp"
#include "matchcert/matching.hpp"

namespace matchcert {

GallaiEdmonds gallai_edmonds(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  const detail::SupportGraph support(g);
  detail::BlossomSearch search(support);
  const std::vector<int> mate = search.maximum();

  std::vector<char> exposable(n, 0);
  std::vector<char> alive(n, 1);
  for (std::size_t v = 0; v < n; ++v) {
    if (mate[v] == detail::kUnmatched) {
      exposable[v] = 1;
      continue;
    }
    // nu(G - v) = nu(G) iff dropping v's edge leaves an augmenting path.
    std::vector<int> trial = mate;
    trial[trial[v]] = detail::kUnmatched;
    trial[v] = detail::kUnmatched;
    alive[v] = 0;
    exposable[v] = search.augment_once(trial, alive) ? 1 : 0;
    alive[v] = 1;
  }

  std::vector<char> boundary(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (!exposable[v]) continue;
    for (VertexId w : support.adjacency[v])
      if (!exposable[w]) boundary[w] = 1;
  }

  GallaiEdmonds out;
  for (VertexId v = 0; v < n; ++v) {
    if (exposable[v])
      out.exposable.push_back(v);
    else if (boundary[v])
      out.boundary.push_back(v);
    else
      out.rest.push_back(v);
  }
  return out;
}

std::size_t count_odd_components(const Multigraph& g, std::span<const VertexId> removed) {
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  for (VertexId v : removed) {
    if (v >= n) throw GraphError("removed vertex out of range");
    seen[v] = 1;
  }

  std::size_t odd = 0;
  std::vector<VertexId> stack;
  for (VertexId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::size_t size = 0;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      ++size;
      for (VertexId w : g.support_neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    if (size % 2 == 1) ++odd;
  }
  return odd;
}

TutteBergeWitness tutte_berge_witness(const Multigraph& g) {
  TutteBergeWitness out;
  out.barrier = gallai_edmonds(g).boundary;
  out.odd_components = count_odd_components(g, out.barrier);
  out.deficiency = deficiency(g);
  if (out.odd_components < out.barrier.size() ||
      out.odd_components - out.barrier.size() != out.deficiency) {
    std::ostringstream msg;
    msg << "Tutte-Berge check failed: odd(G - S) = " << out.odd_components
        << ", |S| = " << out.barrier.size() << ", deficiency = " << out.deficiency;
    throw std::logic_error(msg.str());
  }
  return out;
}

std::optional<std::vector<VertexId>> hall_violator(const Multigraph& g,
                                                   std::span<const VertexId> side) {
  const std::size_t n = g.vertex_count();
  std::vector<char> on_side(n, 0);
  for (VertexId v : side) {
    if (v >= n) throw GraphError("side vertex out of range");
    on_side[v] = 1;
  }
  for (const auto& b : g.bundles())
    if (on_side[b.u] == on_side[b.v])
      throw GraphError("side is not a colour class of a bipartition (edge " +
                       std::to_string(b.u) + "-" + std::to_string(b.v) + ")");

  // Kuhn's augmenting paths from the side vertices.
  std::vector<int> mate(n, -1);
  std::vector<char> visited(n, 0);
  auto try_kuhn = [&](auto&& self, VertexId v) -> bool {
    for (VertexId w : g.support_neighbors(v)) {
      if (visited[w]) continue;
      visited[w] = 1;
      if (mate[w] < 0 || self(self, static_cast<VertexId>(mate[w]))) {
        mate[w] = static_cast<int>(v);
        mate[v] = static_cast<int>(w);
        return true;
      }
    }
    return false;
  };
  std::vector<VertexId> ordered(side.begin(), side.end());
  std::sort(ordered.begin(), ordered.end());
  ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());
  for (VertexId v : ordered) {
    std::fill(visited.begin(), visited.end(), 0);
    try_kuhn(try_kuhn, v);
  }

  // Alternating reachability from exposed side vertices: side -> any neighbour,
  // other side -> its mate. Every reached non-side vertex is matched, so the
  // reached side vertices outnumber their neighbourhood by the exposed count.
  std::vector<char> reached(n, 0);
  std::queue<VertexId> queue;
  for (VertexId v : ordered) {
    if (mate[v] < 0) {
      reached[v] = 1;
      queue.push(v);
    }
  }
  if (queue.empty()) return std::nullopt;

  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop();
    for (VertexId w : g.support_neighbors(v)) {
      if (reached[w]) continue;
      reached[w] = 1;
      const auto partner = static_cast<VertexId>(mate[w]);
      if (!reached[partner]) {
        reached[partner] = 1;
        queue.push(partner);
      }
    }
  }

  std::vector<VertexId> violator;
  for (VertexId v : ordered)
    if (reached[v]) violator.push_back(v);
  return violator;
}

}  // namespace matchcert
