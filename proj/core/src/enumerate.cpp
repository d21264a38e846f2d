#include <stdexcept>

#include "blossom.hpp"
#include "matchcert/matching.hpp"

namespace matchcert {

namespace {

class Enumerator {
 public:
  Enumerator(const Multigraph& g, std::uint64_t cap, const MatchingVisitor& visit)
      : support_(g), search_(support_), alive_(g.vertex_count(), 1), cap_(cap), visit_(visit) {}

  EnumerationResult run() {
    std::size_t target = 0;
    std::vector<int> mate = search_.maximum(&target);
    descend(std::move(mate), target);
    result_.exhaustive = !stopped_;
    return result_;
  }

 private:
  // Detaches v from its partner; returns 1 if an edge was removed.
  static std::size_t unmatch(std::vector<int>& mate, int v) {
    const int w = mate[v];
    if (w == detail::kUnmatched) return 0;
    mate[v] = mate[w] = detail::kUnmatched;
    return 1;
  }

  // Invariant: `mate` is a maximum matching of the live subgraph, of size
  // `target`, and every edge chosen so far sits in `chosen_`.
  void descend(std::vector<int> mate, std::size_t target) {
    if (stopped_) return;
    if (target == 0) {
      emit();
      return;
    }

    int v = -1;
    for (std::size_t u = 0; u < alive_.size() && v < 0; ++u) {
      if (!alive_[u]) continue;
      for (VertexId w : support_.adjacency[u]) {
        if (alive_[w]) {
          v = static_cast<int>(u);
          break;
        }
      }
    }
    if (v < 0) throw std::logic_error("enumeration lost its matching invariant");

    alive_[v] = 0;
    for (VertexId wid : support_.adjacency[v]) {
      const int w = static_cast<int>(wid);
      if (!alive_[w]) continue;
      std::vector<int> child = mate;
      const std::size_t removed = unmatch(child, v) + unmatch(child, w);
      alive_[w] = 0;
      // Residual needs target - 1 edges; it currently holds target - removed.
      if (removed == 1 || search_.augment_once(child, alive_)) {
        chosen_.emplace_back(static_cast<VertexId>(v), wid);
        descend(std::move(child), target - 1);
        chosen_.pop_back();
      }
      alive_[w] = 1;
      if (stopped_) break;
    }

    if (!stopped_) {
      std::vector<int> child = std::move(mate);
      const std::size_t removed = unmatch(child, v);
      if (removed == 0 || search_.augment_once(child, alive_)) descend(std::move(child), target);
    }
    alive_[v] = 1;
  }

  void emit() {
    if (result_.count == cap_) {
      stopped_ = true;
      return;
    }
    ++result_.count;
    if (!visit_(Matching(chosen_))) {
      stopped_ = true;
      result_.stopped_by_visitor = true;
    }
  }

  detail::SupportGraph support_;
  detail::BlossomSearch search_;
  std::vector<char> alive_;
  std::vector<Edge> chosen_;
  std::uint64_t cap_;
  const MatchingVisitor& visit_;
  EnumerationResult result_;
  bool stopped_ = false;
};

}  // namespace

EnumerationResult enumerate_maximum_matchings(const Multigraph& g, std::uint64_t cap,
                                              const MatchingVisitor& visit) {
  if (cap == 0) throw std::invalid_argument("enumeration cap must be at least 1");
  return Enumerator(g, cap, visit).run();
}

MatchingList all_maximum_matchings(const Multigraph& g, std::uint64_t cap) {
  MatchingList out;
  const auto result = enumerate_maximum_matchings(g, cap, [&](const Matching& m) {
    out.matchings.push_back(m);
    return true;
  });
  out.exhaustive = result.exhaustive;
  return out;
}

}  // namespace matchcert
