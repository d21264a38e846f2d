#include <algorithm>
#include <string>

#include "blossom.hpp"
#include "matchcert/matching.hpp"

namespace matchcert {

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (auto& [u, v] : edges_) {
    if (u == v) throw GraphError("matching edge is a loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  std::vector<VertexId> ends;
  ends.reserve(edges_.size() * 2);
  for (const auto& [u, v] : edges_) {
    ends.push_back(u);
    ends.push_back(v);
  }
  std::sort(ends.begin(), ends.end());
  if (std::adjacent_find(ends.begin(), ends.end()) != ends.end())
    throw GraphError("matching edges are not vertex-disjoint");
}

bool Matching::covers(VertexId v) const noexcept { return mate(v).has_value(); }

std::optional<VertexId> Matching::mate(VertexId v) const noexcept {
  for (const auto& [a, b] : edges_) {
    if (a == v) return b;
    if (b == v) return a;
  }
  return std::nullopt;
}

bool is_valid_matching(const Multigraph& g, const Matching& m) {
  std::vector<char> used(g.vertex_count(), 0);
  for (const auto& [u, v] : m.edges()) {
    if (u >= g.vertex_count() || v >= g.vertex_count()) return false;
    if (!g.adjacent(u, v) || used[u] || used[v]) return false;
    used[u] = used[v] = 1;
  }
  return true;
}

namespace detail {

Matching to_matching(const std::vector<int>& mate) {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < mate.size(); ++v)
    if (mate[v] != kUnmatched && static_cast<std::size_t>(mate[v]) > v)
      edges.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>(mate[v]));
  return Matching(std::move(edges));
}

}  // namespace detail

Matching maximum_matching(const Multigraph& g) {
  const detail::SupportGraph support(g);
  detail::BlossomSearch search(support);
  return detail::to_matching(search.maximum());
}

std::size_t matching_number(const Multigraph& g) {
  const detail::SupportGraph support(g);
  detail::BlossomSearch search(support);
  std::size_t size = 0;
  search.maximum(&size);
  return size;
}

std::size_t deficiency(const Multigraph& g) { return g.vertex_count() - 2 * matching_number(g); }

std::vector<VertexId> exposed_vertices(const Multigraph& g, const Matching& m) {
  if (!is_valid_matching(g, m)) throw GraphError("not a matching of this graph");
  std::vector<char> covered(g.vertex_count(), 0);
  for (const auto& [u, v] : m.edges()) covered[u] = covered[v] = 1;
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!covered[v]) out.push_back(v);
  return out;
}

}  // namespace matchcert
