#pragma once

#include <cstddef>
#include <vector>

#include "matchcert/matching.hpp"
#include "matchcert/multigraph.hpp"

namespace matchcert::detail {

inline constexpr int kUnmatched = -1;

/// Simple undirected graph with sorted adjacency lists.
struct SupportGraph {
  explicit SupportGraph(const Multigraph& g);

  std::size_t size() const noexcept { return adjacency.size(); }

  std::vector<std::vector<VertexId>> adjacency;
};

/// Edmonds' blossom search on a support graph restricted to the vertices
/// flagged in `alive`. The mate array is owned by the caller so the
/// enumerator can warm-start from a parent's matching.
class BlossomSearch {
 public:
  explicit BlossomSearch(const SupportGraph& graph);

  /// Looks for one augmenting path, trying exposed live vertices in ascending
  /// order as roots. Augments `mate` and returns true on success.
  bool augment_once(std::vector<int>& mate, const std::vector<char>& alive);

  /// Augments until maximum. Returns the final matching size.
  std::size_t maximize(std::vector<int>& mate, const std::vector<char>& alive);

  /// Greedy start followed by maximize() on the whole graph.
  std::vector<int> maximum(std::size_t* size = nullptr);

 private:
  int find_path(int root, const std::vector<int>& mate, const std::vector<char>& alive);
  int lowest_common_base(int a, int b, const std::vector<int>& mate);
  void mark_path(int v, int base, int child, const std::vector<int>& mate);

  const SupportGraph& graph_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> in_tree_;
  std::vector<char> in_blossom_;
  std::vector<char> on_path_;
  std::vector<int> queue_;
};

std::size_t matching_size(const std::vector<int>& mate);

Matching to_matching(const std::vector<int>& mate);

}  // namespace matchcert::detail
