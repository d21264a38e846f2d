#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "matchcert/multigraph.hpp"

namespace matchcert::detail {

/// Support-graph adjacency as bit rows, for fast common-neighbour queries.
class NeighbourhoodRows {
 public:
  explicit NeighbourhoodRows(const Multigraph& g)
      : words_((g.vertex_count() + 63) / 64), rows_(g.vertex_count() * words_, 0) {
    for (const auto& b : g.bundles()) {
      set(b.u, b.v);
      set(b.v, b.u);
    }
  }

  /// Smallest common neighbour of u and v, if any.
  std::optional<VertexId> shared(VertexId u, VertexId v) const {
    const std::uint64_t* a = &rows_[u * words_];
    const std::uint64_t* b = &rows_[v * words_];
    for (std::size_t w = 0; w < words_; ++w) {
      const std::uint64_t both = a[w] & b[w];
      if (both) return static_cast<VertexId>(w * 64 + std::countr_zero(both));
    }
    return std::nullopt;
  }

 private:
  void set(VertexId row, VertexId col) { rows_[row * words_ + col / 64] |= std::uint64_t{1} << (col % 64); }

  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

}  // namespace matchcert::detail
