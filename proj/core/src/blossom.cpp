#include "blossom.hpp"

#include <algorithm>

namespace matchcert::detail {

SupportGraph::SupportGraph(const Multigraph& g) : adjacency(g.vertex_count()) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) adjacency[v] = g.support_neighbors(v);
}

BlossomSearch::BlossomSearch(const SupportGraph& graph)
    : graph_(graph),
      parent_(graph.size()),
      base_(graph.size()),
      in_tree_(graph.size()),
      in_blossom_(graph.size()),
      on_path_(graph.size()) {
  queue_.reserve(graph.size());
}

int BlossomSearch::lowest_common_base(int a, int b, const std::vector<int>& mate) {
  std::fill(on_path_.begin(), on_path_.end(), 0);
  for (;;) {
    a = base_[a];
    on_path_[a] = 1;
    if (mate[a] == kUnmatched) break;
    a = parent_[mate[a]];
  }
  for (;;) {
    b = base_[b];
    if (on_path_[b]) return b;
    b = parent_[mate[b]];
  }
}

void BlossomSearch::mark_path(int v, int base, int child, const std::vector<int>& mate) {
  while (base_[v] != base) {
    in_blossom_[base_[v]] = 1;
    in_blossom_[base_[mate[v]]] = 1;
    parent_[v] = child;
    child = mate[v];
    v = parent_[mate[v]];
  }
}

// Grows an alternating tree from root, contracting odd cycles into their base.
// Returns the exposed endpoint of an augmenting path or kUnmatched.
int BlossomSearch::find_path(int root, const std::vector<int>& mate,
                             const std::vector<char>& alive) {
  const int n = static_cast<int>(graph_.size());
  std::fill(in_tree_.begin(), in_tree_.end(), 0);
  std::fill(parent_.begin(), parent_.end(), kUnmatched);
  for (int i = 0; i < n; ++i) base_[i] = i;

  queue_.clear();
  in_tree_[root] = 1;
  queue_.push_back(root);
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const int v = queue_[head];
    for (VertexId w : graph_.adjacency[v]) {
      const int to = static_cast<int>(w);
      if (!alive[to] || base_[v] == base_[to] || mate[v] == to) continue;

      if (to == root || (mate[to] != kUnmatched && parent_[mate[to]] != kUnmatched)) {
        const int cur = lowest_common_base(v, to, mate);
        std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
        mark_path(v, cur, to, mate);
        mark_path(to, cur, v, mate);
        for (int i = 0; i < n; ++i) {
          if (!alive[i] || !in_blossom_[base_[i]]) continue;
          base_[i] = cur;
          if (!in_tree_[i]) {
            in_tree_[i] = 1;
            queue_.push_back(i);
          }
        }
      } else if (parent_[to] == kUnmatched) {
        parent_[to] = v;
        if (mate[to] == kUnmatched) return to;
        in_tree_[mate[to]] = 1;
        queue_.push_back(mate[to]);
      }
    }
  }
  return kUnmatched;
}

bool BlossomSearch::augment_once(std::vector<int>& mate, const std::vector<char>& alive) {
  const int n = static_cast<int>(graph_.size());
  for (int root = 0; root < n; ++root) {
    if (!alive[root] || mate[root] != kUnmatched) continue;
    int v = find_path(root, mate, alive);
    if (v == kUnmatched) continue;
    while (v != kUnmatched) {
      const int pv = parent_[v];
      const int next = mate[pv];
      mate[v] = pv;
      mate[pv] = v;
      v = next;
    }
    return true;
  }
  return false;
}

std::size_t BlossomSearch::maximize(std::vector<int>& mate, const std::vector<char>& alive) {
  // A root with no augmenting path stays that way after later augmentations,
  // so a single pass over the roots suffices.
  const int n = static_cast<int>(graph_.size());
  for (int root = 0; root < n; ++root) {
    if (!alive[root] || mate[root] != kUnmatched) continue;
    int v = find_path(root, mate, alive);
    while (v != kUnmatched) {
      const int pv = parent_[v];
      const int next = mate[pv];
      mate[v] = pv;
      mate[pv] = v;
      v = next;
    }
  }
  return matching_size(mate);
}

std::vector<int> BlossomSearch::maximum(std::size_t* size) {
  const std::size_t n = graph_.size();
  std::vector<int> mate(n, kUnmatched);
  for (std::size_t v = 0; v < n; ++v) {
    if (mate[v] != kUnmatched) continue;
    for (VertexId w : graph_.adjacency[v]) {
      if (mate[w] == kUnmatched) {
        mate[v] = static_cast<int>(w);
        mate[w] = static_cast<int>(v);
        break;
      }
    }
  }
  const std::vector<char> alive(n, 1);
  const std::size_t s = maximize(mate, alive);
  if (size) *size = s;
  return mate;
}

std::size_t matching_size(const std::vector<int>& mate) {
  std::size_t covered = 0;
  for (int m : mate)
    if (m != kUnmatched) ++covered;
  return covered / 2;
}

}  // namespace matchcert::detail
