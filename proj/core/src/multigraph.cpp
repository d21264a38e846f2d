#include "matchcert/multigraph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>

namespace matchcert {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

bool is_plain(const VertexLabel& label) noexcept {
  return std::holds_alternative<PlainLabel>(label);
}

std::string to_string(const VertexLabel& label) {
  return std::visit(
      Overloaded{
          [](const PlainLabel& l) { return std::to_string(l.index); },
          [](const HubLabel& l) { return std::string(1, l.name); },
          [](const PairLabel& l) {
            return "u(" + std::to_string(l.i) + "," + std::to_string(l.j) + ")";
          },
          [](const CopyLabel& l) {
            return "v" + std::to_string(l.k) + "(" + std::to_string(l.i) + ")";
          },
      },
      label);
}

void validate_label(const VertexLabel& label) {
  std::visit(Overloaded{
                 [](const PlainLabel&) {},
                 [](const HubLabel& l) {
                   if (l.name != 'x' && l.name != 'y' && l.name != 'z')
                     throw GraphError("hub label must be x, y or z");
                 },
                 [](const PairLabel& l) {
                   if (l.i < 1 || l.i >= l.j)
                     throw GraphError("pair label requires 1 <= i < j");
                 },
                 [](const CopyLabel& l) {
                   if (l.k < 1 || l.i < 1)
                     throw GraphError("copy label requires k >= 1 and i >= 1");
                 },
             },
             label);
}

Multigraph::Multigraph(std::size_t vertex_count)
    : adjacency_(vertex_count), degrees_(vertex_count, 0) {
  if (vertex_count > std::numeric_limits<VertexId>::max())
    throw GraphError("vertex count exceeds id range");
  labels_.reserve(vertex_count);
  for (std::size_t v = 0; v < vertex_count; ++v)
    labels_.emplace_back(PlainLabel{static_cast<VertexId>(v)});
}

void Multigraph::check_vertex(VertexId v) const {
  if (v >= adjacency_.size()) {
    std::ostringstream msg;
    msg << "vertex id " << v << " out of range (n=" << adjacency_.size() << ")";
    throw GraphError(msg.str());
  }
}

void Multigraph::add_edges(VertexId u, VertexId v, Multiplicity count) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("loop at vertex " + std::to_string(u) + " rejected");
  if (count == 0) throw GraphError("multiplicity must be at least 1");

  auto& forward = adjacency_[u][v];
  if (forward == 0) ++bundle_count_;
  forward += count;
  adjacency_[v][u] += count;
  degrees_[u] += count;
  degrees_[v] += count;
  edge_count_ += count;
}

void Multigraph::remove_edges(VertexId u, VertexId v, Multiplicity count) {
  check_vertex(u);
  check_vertex(v);
  auto it = adjacency_[u].find(v);
  if (it == adjacency_[u].end() || it->second < count)
    throw GraphError("cannot remove more edges than the bundle holds");
  if (count == 0) return;

  it->second -= count;
  if (it->second == 0) {
    adjacency_[u].erase(it);
    adjacency_[v].erase(u);
    --bundle_count_;
  } else {
    adjacency_[v][u] -= count;
  }
  degrees_[u] -= count;
  degrees_[v] -= count;
  edge_count_ -= count;
}

Multiplicity Multigraph::multiplicity(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  const auto it = adjacency_[u].find(v);
  return it == adjacency_[u].end() ? 0 : it->second;
}

std::size_t Multigraph::degree(VertexId v) const {
  check_vertex(v);
  return degrees_[v];
}

std::size_t Multigraph::max_degree() const {
  if (empty()) throw GraphError("max_degree of an empty graph");
  return *std::max_element(degrees_.begin(), degrees_.end());
}

std::size_t Multigraph::min_degree() const {
  if (empty()) throw GraphError("min_degree of an empty graph");
  return *std::min_element(degrees_.begin(), degrees_.end());
}

std::vector<VertexId> Multigraph::support_neighbors(VertexId v) const {
  check_vertex(v);
  std::vector<VertexId> out;
  out.reserve(adjacency_[v].size());
  for (const auto& [w, m] : adjacency_[v]) out.push_back(w);
  return out;
}

std::vector<VertexId> Multigraph::common_neighbors(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("common_neighbors needs two distinct vertices");
  std::vector<VertexId> out;
  auto a = adjacency_[u].begin();
  auto b = adjacency_[v].begin();
  while (a != adjacency_[u].end() && b != adjacency_[v].end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      out.push_back(a->first);
      ++a;
      ++b;
    }
  }
  return out;
}

std::vector<Bundle> Multigraph::bundles() const {
  std::vector<Bundle> out;
  out.reserve(bundle_count_);
  for (VertexId u = 0; u < adjacency_.size(); ++u) {
    for (auto it = adjacency_[u].upper_bound(u); it != adjacency_[u].end(); ++it)
      out.push_back({u, it->first, it->second});
  }
  return out;
}

void Multigraph::set_label(VertexId v, VertexLabel label) {
  check_vertex(v);
  validate_label(label);
  if (auto* plain = std::get_if<PlainLabel>(&label); plain && plain->index != v)
    throw GraphError("plain label must carry the vertex's own index");

  if (!is_plain(label)) {
    const auto it = label_index_.find(label);
    if (it != label_index_.end() && it->second != v)
      throw GraphError("label " + to_string(label) + " already assigned to vertex " +
                       std::to_string(it->second));
  }
  if (!is_plain(labels_[v])) label_index_.erase(labels_[v]);
  if (!is_plain(label)) label_index_[label] = v;
  labels_[v] = label;
}

VertexLabel Multigraph::label(VertexId v) const {
  check_vertex(v);
  return labels_[v];
}

std::optional<VertexId> Multigraph::find(const VertexLabel& label) const {
  if (const auto* plain = std::get_if<PlainLabel>(&label)) {
    if (plain->index < vertex_count() && is_plain(labels_[plain->index])) return plain->index;
    return std::nullopt;
  }
  const auto it = label_index_.find(label);
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

VertexId Multigraph::at(const VertexLabel& label) const {
  if (auto v = find(label)) return *v;
  throw GraphError("no vertex labelled " + to_string(label));
}

Multigraph Multigraph::support() const {
  Multigraph out(vertex_count());
  for (const auto& b : bundles()) out.add_edges(b.u, b.v, 1);
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (!is_plain(labels_[v])) out.set_label(v, labels_[v]);
  return out;
}

bool Multigraph::operator==(const Multigraph& other) const {
  return adjacency_ == other.adjacency_ && labels_ == other.labels_;
}

std::optional<std::size_t> regular_degree(const Multigraph& g) {
  if (g.empty()) return std::nullopt;
  const std::size_t d = g.degree(0);
  for (VertexId v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

std::optional<BiregularBipartition> classify_biregular_bipartite(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return std::nullopt;

  constexpr int kUncolored = -1;
  std::vector<int> color(n, kUncolored);
  std::vector<bool> in_a(n, false);
  std::optional<std::size_t> a;
  std::optional<std::size_t> b;

  for (VertexId start = 0; start < n; ++start) {
    if (color[start] != kUncolored) continue;

    std::vector<VertexId> sides[2];
    std::queue<VertexId> queue;
    color[start] = 0;
    queue.push(start);
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop();
      sides[color[v]].push_back(v);
      for (VertexId w : g.support_neighbors(v)) {
        if (color[w] == kUncolored) {
          color[w] = 1 - color[v];
          queue.push(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }

    std::optional<std::size_t> side_degree[2];
    for (int s = 0; s < 2; ++s) {
      for (VertexId v : sides[s]) {
        if (!side_degree[s]) side_degree[s] = g.degree(v);
        if (*side_degree[s] != g.degree(v)) return std::nullopt;
      }
    }

    if (!a) a = side_degree[0];

    const std::size_t dp = *side_degree[0];
    bool first_side_to_a = false;
    if (!side_degree[1]) {
      // isolated vertex
      if (dp == *a) {
        first_side_to_a = true;
      } else {
        if (!b) b = dp;
        if (dp != *b) return std::nullopt;
      }
    } else {
      const std::size_t dq = *side_degree[1];
      if (dp == *a && (!b || dq == *b)) {
        first_side_to_a = true;
        b = dq;
      } else if (dq == *a && (!b || dp == *b)) {
        b = dp;
      } else {
        return std::nullopt;
      }
    }

    for (VertexId v : sides[first_side_to_a ? 0 : 1]) in_a[v] = true;
  }

  BiregularBipartition out;
  out.a = *a;
  out.b = b.value_or(*a);
  for (VertexId v = 0; v < n; ++v) (in_a[v] ? out.part_a : out.part_b).push_back(v);
  return out;
}

}  // namespace matchcert
