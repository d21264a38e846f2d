#include <algorithm>
#include <string>

#include "matchcert/verify.hpp"
#include "neighbourhoods.hpp"

namespace matchcert {

std::optional<StrongCertificate> strong_counterexample_certificate(const Multigraph& g) {
  const std::size_t def = deficiency(g);
  if (def < 2) return std::nullopt;

  StrongCertificate cert;
  cert.deficiency = def;
  cert.exposable = gallai_edmonds(g).exposable;

  const detail::NeighbourhoodRows rows(g);
  const auto& d = cert.exposable;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const auto common = rows.shared(d[i], d[j]);
      if (!common) return std::nullopt;
      cert.shared_neighbor.push_back(*common);
    }
  }
  return cert;
}

std::optional<WeakCertificate> weak_counterexample_certificate(const Multigraph& g,
                                                               std::span<const HubClass> classes) {
  std::vector<char> covered(g.vertex_count(), 0);
  for (const auto& cls : classes) {
    for (VertexId member : cls.members) {
      if (member >= g.vertex_count() || cls.hub >= g.vertex_count())
        throw GraphError("hub class refers to a vertex out of range");
      if (member == cls.hub || !g.adjacent(cls.hub, member))
        throw GraphError("hub " + std::to_string(cls.hub) + " is not adjacent to class member " +
                         std::to_string(member));
      if (covered[member])
        throw GraphError("vertex " + std::to_string(member) + " appears in two hub classes");
      covered[member] = 1;
    }
  }

  const std::size_t def = deficiency(g);
  if (def <= classes.size()) return std::nullopt;

  WeakCertificate cert;
  cert.deficiency = def;
  cert.exposable = gallai_edmonds(g).exposable;
  for (VertexId v : cert.exposable)
    if (!covered[v]) return std::nullopt;
  cert.classes.assign(classes.begin(), classes.end());
  return cert;
}

std::vector<HubClass> greedy_hub_classes(const Multigraph& g, std::span<const VertexId> targets) {
  std::vector<char> uncovered(g.vertex_count(), 0);
  std::size_t remaining = 0;
  for (VertexId t : targets) {
    if (t >= g.vertex_count()) throw GraphError("target vertex out of range");
    if (!uncovered[t]) ++remaining;
    uncovered[t] = 1;
  }

  std::vector<HubClass> classes;
  while (remaining > 0) {
    VertexId best = 0;
    std::size_t best_gain = 0;
    for (VertexId h = 0; h < g.vertex_count(); ++h) {
      std::size_t gain = 0;
      for (VertexId w : g.support_neighbors(h)) gain += uncovered[w];
      if (gain > best_gain) {
        best = h;
        best_gain = gain;
      }
    }
    if (best_gain == 0) return {};

    HubClass cls{best, {}};
    for (VertexId w : g.support_neighbors(best)) {
      if (uncovered[w]) {
        cls.members.push_back(w);
        uncovered[w] = 0;
      }
    }
    remaining -= cls.members.size();
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<HubClass> copy_index_classes(const Multigraph& g) {
  std::vector<HubClass> classes;
  for (int k = 1; k <= 3; ++k) {
    const auto hub = g.find(HubLabel{static_cast<char>('x' + k - 1)});
    if (!hub) return {};
    HubClass cls{*hub, {}};
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      const auto label = g.label(v);
      const auto* copy = std::get_if<CopyLabel>(&label);
      if (!copy || copy->k != k) continue;
      if (!g.adjacent(*hub, v)) return {};
      cls.members.push_back(v);
    }
    if (!cls.members.empty()) classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace matchcert
