#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace matchcert {

using VertexId = std::uint32_t;
using Multiplicity = std::uint32_t;

/// Raised on structural misuse of a graph: loops, out-of-range ids,
/// duplicate labels, queries on an empty graph.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vertex labels. Family builders attach these so vertices can be addressed
// symbolically; parsed graphs without label lines fall back to PlainLabel.

/// One of the three hub vertices x, y, z.
struct HubLabel {
  char name = 'x';
  auto operator<=>(const HubLabel&) const = default;
};

/// u_(i,j) with 1 <= i < j.
struct PairLabel {
  int i = 1;
  int j = 2;
  auto operator<=>(const PairLabel&) const = default;
};

/// v_k^(i): copy k of group i, both 1-based.
struct CopyLabel {
  int k = 1;
  int i = 1;
  auto operator<=>(const CopyLabel&) const = default;
};

struct PlainLabel {
  VertexId index = 0;
  auto operator<=>(const PlainLabel&) const = default;
};

using VertexLabel = std::variant<PlainLabel, HubLabel, PairLabel, CopyLabel>;

bool is_plain(const VertexLabel& label) noexcept;

/// Human-readable form: "x", "u(1,2)", "v1(3)", or the plain index.
std::string to_string(const VertexLabel& label);

/// Throws GraphError if the label violates its own invariants
/// (hub name outside {x,y,z}, pair with i >= j, non-positive indices).
void validate_label(const VertexLabel& label);

/// A bundle E(uv): all parallel edges between u and v, with u < v.
struct Bundle {
  VertexId u = 0;
  VertexId v = 0;
  Multiplicity multiplicity = 0;
  bool operator==(const Bundle&) const = default;
};

/// Loop-free multigraph on dense vertex ids [0, n). Parallel edges are stored
/// as one bundle per unordered pair with an integer multiplicity.
///
/// Mutation is meant for the building phase only; a finished graph is treated
/// as immutable and may be shared between readers.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::size_t vertex_count);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  bool empty() const noexcept { return adjacency_.empty(); }

  /// Adds `count` parallel edges between u and v.
  void add_edges(VertexId u, VertexId v, Multiplicity count = 1);

  /// Removes `count` parallel edges; the bundle disappears when it reaches 0.
  void remove_edges(VertexId u, VertexId v, Multiplicity count = 1);

  Multiplicity multiplicity(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const { return multiplicity(u, v) > 0; }

  /// Multiplicity-weighted degree.
  std::size_t degree(VertexId v) const;
  std::size_t max_degree() const;
  std::size_t min_degree() const;

  /// Total number of edges counted with multiplicity.
  std::uint64_t edge_count() const noexcept { return edge_count_; }
  /// Number of bundles, i.e. edges of the support graph.
  std::size_t support_edge_count() const noexcept { return bundle_count_; }

  /// Ascending ids of all w sharing a bundle with v.
  std::vector<VertexId> support_neighbors(VertexId v) const;
  /// Ascending ids adjacent to both u and v. u == v is rejected.
  std::vector<VertexId> common_neighbors(VertexId u, VertexId v) const;

  /// All bundles in lexicographic (u, v) order.
  std::vector<Bundle> bundles() const;

  void set_label(VertexId v, VertexLabel label);
  /// The attached label, or PlainLabel{v} when none was set.
  VertexLabel label(VertexId v) const;
  bool has_labels() const noexcept { return !label_index_.empty(); }
  std::optional<VertexId> find(const VertexLabel& label) const;
  /// Like find() but throws GraphError if the label is absent.
  VertexId at(const VertexLabel& label) const;

  /// Same vertices and labels with every multiplicity collapsed to 1.
  Multigraph support() const;

  bool operator==(const Multigraph& other) const;

 private:
  void check_vertex(VertexId v) const;

  std::vector<std::map<VertexId, Multiplicity>> adjacency_;
  std::vector<std::size_t> degrees_;
  std::vector<VertexLabel> labels_;
  std::map<VertexLabel, VertexId> label_index_;
  std::uint64_t edge_count_ = 0;
  std::size_t bundle_count_ = 0;
};

/// Result of a successful (a,b)-biregular bipartite classification.
/// `part_a` is the side containing the smallest vertex id of the graph.
struct BiregularBipartition {
  std::size_t a = 0;
  std::size_t b = 0;
  std::vector<VertexId> part_a;
  std::vector<VertexId> part_b;
};

/// Returns the degrees and parts if g is bipartite with a uniform degree on
/// each side, otherwise nullopt. Components are oriented so that the per-side
/// degrees agree globally.
std::optional<BiregularBipartition> classify_biregular_bipartite(const Multigraph& g);

/// The common degree if every vertex has it, otherwise nullopt.
std::optional<std::size_t> regular_degree(const Multigraph& g);

}  // namespace matchcert
