#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "matchcert/multigraph.hpp"

namespace matchcert {

// The four counterexample families. All builders attach labels and use fixed
// vertex-id layouts:
//
//   B(r)  U = u(i,j), 1 <= i < j <= 2r, in lexicographic (i,j) order, then
//         V = v_k^(i) in (i,k) order: id = |U| + (i-1)*r + (k-1).
//         Simple, (2r, 2r-1)-biregular bipartite.
//   G(r)  x=0, y=1, z=2, then triangle i holds v_1^(i), v_2^(i), v_3^(i) at
//         ids 3 + 3(i-1) + (k-1), i = 1..2r+1. Hub edges x-v1, y-v2, z-v3;
//         every triangle side has multiplicity r. (2r+1)-regular.
//   H(r)  G(r) with one parallel edge removed from each v3-v1 bundle.
//         Hubs and v2 have degree 2r+1, v1 and v3 have degree 2r.
//   F(r)  x, y, z, then r triangles in the same layout. v1 is joined to x and
//         y, v2 to x and z, v3 to y and z; triangle sides have multiplicity
//         r-1. 2r-regular.

enum class Family { B, G, H, F };

std::string_view to_string(Family family) noexcept;
std::optional<Family> parse_family(std::string_view name) noexcept;
/// Smallest admissible r: 2 for B, 3 for G and H, 5 for F.
int minimum_parameter(Family family) noexcept;

struct FamilySpec {
  Family family = Family::B;
  int r = 2;
};

/// Throws std::invalid_argument when r is below the family's minimum.
void validate(const FamilySpec& spec);

enum class DegreeShape { regular, biregular, range };

/// regular: a == b == the degree. biregular: (a, b) with a on the U side.
/// range: a = max degree, b = min degree.
struct DegreeProfile {
  DegreeShape shape = DegreeShape::regular;
  std::size_t a = 0;
  std::size_t b = 0;
  bool operator==(const DegreeProfile&) const = default;
};

struct FamilyStats {
  std::size_t vertex_count = 0;
  std::uint64_t weighted_edge_count = 0;
  DegreeProfile degrees;
  std::size_t expected_deficiency = 0;
  bool operator==(const FamilyStats&) const = default;
};

/// Closed-form counts for the family at r.
FamilyStats expected_stats(const FamilySpec& spec);

/// "n=14 m=24 biregular=(4,3) def=2"
std::string format_stats(const FamilyStats& stats);

Multigraph build_B(int r);
Multigraph build_G(int r);
Multigraph build_H(int r);
Multigraph build_F(int r);
Multigraph build(const FamilySpec& spec);

}  // namespace matchcert
