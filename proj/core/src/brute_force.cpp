#include <algorithm>
#include <stdexcept>
#include <string>

#include "matchcert/matching.hpp"

namespace matchcert {

namespace {

// Plain include/exclude recursion over the support edge list.
class SubsetSearch {
 public:
  explicit SubsetSearch(const Multigraph& g) : used_(g.vertex_count(), 0) {
    if (g.support_edge_count() > kBruteForceEdgeLimit)
      throw std::invalid_argument("brute-force oracle limited to " +
                                  std::to_string(kBruteForceEdgeLimit) + " support edges, got " +
                                  std::to_string(g.support_edge_count()));
    for (const auto& b : g.bundles()) edges_.emplace_back(b.u, b.v);
  }

  void run() { recurse(0); }

  std::size_t best() const { return best_; }
  std::vector<Matching> take_all() {
    std::sort(found_.begin(), found_.end());
    found_.erase(std::unique(found_.begin(), found_.end()), found_.end());
    return std::move(found_);
  }

 private:
  void recurse(std::size_t index) {
    if (index == edges_.size()) {
      if (current_.size() > best_) {
        best_ = current_.size();
        found_.clear();
      }
      if (current_.size() == best_) found_.emplace_back(current_);
      return;
    }
    const auto [u, v] = edges_[index];
    if (!used_[u] && !used_[v]) {
      used_[u] = used_[v] = 1;
      current_.push_back(edges_[index]);
      recurse(index + 1);
      current_.pop_back();
      used_[u] = used_[v] = 0;
    }
    recurse(index + 1);
  }

  std::vector<Edge> edges_;
  std::vector<char> used_;
  std::vector<Edge> current_;
  std::vector<Matching> found_;
  std::size_t best_ = 0;
};

}  // namespace

std::size_t brute_force_matching_number(const Multigraph& g) {
  SubsetSearch search(g);
  search.run();
  return search.best();
}

std::vector<Matching> brute_force_all_maximum_matchings(const Multigraph& g) {
  SubsetSearch search(g);
  search.run();
  return search.take_all();
}

}  // namespace matchcert
