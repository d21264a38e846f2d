#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "matchcert/multigraph.hpp"

namespace matchcert {

/// Unordered support edge stored with first < second.
using Edge = std::pair<VertexId, VertexId>;

/// A set of vertex-disjoint support edges, kept sorted.
class Matching {
 public:
  Matching() = default;
  /// Normalizes orientation and order. Throws GraphError if two edges share
  /// a vertex or an edge is a loop.
  explicit Matching(std::vector<Edge> edges);

  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool covers(VertexId v) const noexcept;
  std::optional<VertexId> mate(VertexId v) const noexcept;

  auto operator<=>(const Matching&) const = default;

 private:
  std::vector<Edge> edges_;
};

/// Every edge is a bundle of g and no vertex is used twice.
bool is_valid_matching(const Multigraph& g, const Matching& m);

/// Maximum cardinality matching of the support graph (Edmonds' blossom
/// algorithm). Deterministic: greedy start and augmentation roots both scan
/// vertices in ascending id order.
Matching maximum_matching(const Multigraph& g);

std::size_t matching_number(const Multigraph& g);

/// |V| - 2 * matching_number(g): the number of vertices every maximum
/// matching leaves exposed.
std::size_t deficiency(const Multigraph& g);

/// Vertices covered by no edge of m, ascending. Throws GraphError if m is
/// not a matching of g.
std::vector<VertexId> exposed_vertices(const Multigraph& g, const Matching& m);

// ---------------------------------------------------------------------------
// Enumeration

struct EnumerationResult {
  std::uint64_t count = 0;  // matchings handed to the visitor
  bool exhaustive = false;  // every maximum matching was emitted
  bool stopped_by_visitor = false;
};

/// Returning false from the visitor stops the enumeration.
using MatchingVisitor = std::function<bool(const Matching&)>;

/// Streams the distinct maximum matchings of the support graph.
///
/// Branch and prune: the smallest live vertex v with a live neighbour is
/// either matched to some neighbour w or left exposed, and a branch is only
/// entered if the residual graph can still reach the required matching size.
/// The branches partition the solution space, so nothing is emitted twice and
/// every node of the search tree leads to at least one matching.
///
/// At most `cap` matchings are emitted; if more exist, `exhaustive` is false.
EnumerationResult enumerate_maximum_matchings(const Multigraph& g, std::uint64_t cap,
                                              const MatchingVisitor& visit);

struct MatchingList {
  std::vector<Matching> matchings;
  bool exhaustive = false;
};

MatchingList all_maximum_matchings(const Multigraph& g, std::uint64_t cap);

// ---------------------------------------------------------------------------
// Brute-force oracle, independent of the blossom code. Only for small graphs.

inline constexpr std::size_t kBruteForceEdgeLimit = 32;

std::size_t brute_force_matching_number(const Multigraph& g);
/// Sorted, duplicate-free.
std::vector<Matching> brute_force_all_maximum_matchings(const Multigraph& g);

// ---------------------------------------------------------------------------
// Structure

/// Gallai-Edmonds partition. `exposable` (D) holds the vertices missed by at
/// least one maximum matching, `boundary` (A) their neighbours outside D, and
/// `rest` (C) everything else. All three are ascending.
struct GallaiEdmonds {
  std::vector<VertexId> exposable;
  std::vector<VertexId> boundary;
  std::vector<VertexId> rest;
};

/// Uses the deletion test v in D <=> nu(G - v) = nu(G).
GallaiEdmonds gallai_edmonds(const Multigraph& g);

/// A set S with odd_components(G - S) - |S| = deficiency(G).
struct TutteBergeWitness {
  std::vector<VertexId> barrier;
  std::size_t odd_components = 0;
  std::size_t deficiency = 0;
};

/// Number of odd connected components of G minus `removed`.
std::size_t count_odd_components(const Multigraph& g, std::span<const VertexId> removed);

/// Takes the Gallai-Edmonds boundary as the barrier and checks the Tutte-Berge
/// equality before returning; a mismatch throws std::logic_error.
TutteBergeWitness tutte_berge_witness(const Multigraph& g);

/// For a bipartite g with `side` as one colour class: a subset W of side with
/// |N(W)| < |W|, or nullopt if some matching saturates side. The returned W is
/// the set of side vertices reachable by alternating paths from the vertices a
/// maximum matching leaves exposed. Throws GraphError if side is not a colour
/// class of a bipartition.
std::optional<std::vector<VertexId>> hall_violator(const Multigraph& g,
                                                   std::span<const VertexId> side);

}  // namespace matchcert
