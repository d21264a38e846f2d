#include "matchcert/families.hpp"

#include <sstream>
#include <stdexcept>

namespace matchcert {

std::string_view to_string(Family family) noexcept {
  switch (family) {
    case Family::B: return "B";
    case Family::G: return "G";
    case Family::H: return "H";
    case Family::F: return "F";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  if (name == "B") return Family::B;
  if (name == "G") return Family::G;
  if (name == "H") return Family::H;
  if (name == "F") return Family::F;
  return std::nullopt;
}

int minimum_parameter(Family family) noexcept {
  switch (family) {
    case Family::B: return 2;
    case Family::G:
    case Family::H: return 3;
    case Family::F: return 5;
  }
  return 0;
}

void validate(const FamilySpec& spec) {
  const int lo = minimum_parameter(spec.family);
  if (spec.r < lo)
    throw std::invalid_argument("family " + std::string(to_string(spec.family)) +
                                " requires r >= " + std::to_string(lo) + ", got " +
                                std::to_string(spec.r));
}

FamilyStats expected_stats(const FamilySpec& spec) {
  validate(spec);
  const auto r = static_cast<std::size_t>(spec.r);
  FamilyStats s;
  switch (spec.family) {
    case Family::B: {
      const std::size_t u_side = 2 * r * r - r;
      s.vertex_count = u_side + 2 * r * r;
      s.weighted_edge_count = 2 * r * u_side;
      s.degrees = {DegreeShape::biregular, 2 * r, 2 * r - 1};
      s.expected_deficiency = r;
      break;
    }
    case Family::G:
      s.vertex_count = 6 * r + 6;
      s.weighted_edge_count = (2 * r + 1) * (3 * r + 3);
      s.degrees = {DegreeShape::regular, 2 * r + 1, 2 * r + 1};
      s.expected_deficiency = 2 * r - 2;
      break;
    case Family::H:
      s.vertex_count = 6 * r + 6;
      s.weighted_edge_count = (2 * r + 1) * (3 * r + 3) - (2 * r + 1);
      s.degrees = {DegreeShape::range, 2 * r + 1, 2 * r};
      s.expected_deficiency = 2 * r - 2;
      break;
    case Family::F:
      s.vertex_count = 3 * r + 3;
      s.weighted_edge_count = r * (3 * r + 3);
      s.degrees = {DegreeShape::regular, 2 * r, 2 * r};
      s.expected_deficiency = r - 3;
      break;
  }
  return s;
}

std::string format_stats(const FamilyStats& stats) {
  std::ostringstream out;
  out << "n=" << stats.vertex_count << " m=" << stats.weighted_edge_count << ' ';
  switch (stats.degrees.shape) {
    case DegreeShape::regular: out << "regular=" << stats.degrees.a; break;
    case DegreeShape::biregular:
      out << "biregular=(" << stats.degrees.a << ',' << stats.degrees.b << ')';
      break;
    case DegreeShape::range:
      out << "max_degree=" << stats.degrees.a << " min_degree=" << stats.degrees.b;
      break;
  }
  out << " def=" << stats.expected_deficiency;
  return out.str();
}

namespace {

constexpr VertexId kHubs = 3;

VertexId triangle_vertex(int i, int k) { return kHubs + 3 * (i - 1) + (k - 1); }

Multigraph with_hubs_and_triangles(int triangles) {
  Multigraph g(kHubs + 3 * static_cast<std::size_t>(triangles));
  g.set_label(0, HubLabel{'x'});
  g.set_label(1, HubLabel{'y'});
  g.set_label(2, HubLabel{'z'});
  for (int i = 1; i <= triangles; ++i)
    for (int k = 1; k <= 3; ++k) g.set_label(triangle_vertex(i, k), CopyLabel{k, i});
  return g;
}

void add_triangle(Multigraph& g, int i, Multiplicity m) {
  g.add_edges(triangle_vertex(i, 1), triangle_vertex(i, 2), m);
  g.add_edges(triangle_vertex(i, 2), triangle_vertex(i, 3), m);
  g.add_edges(triangle_vertex(i, 3), triangle_vertex(i, 1), m);
}

}  // namespace

Multigraph build_B(int r) {
  validate({Family::B, r});
  const int groups = 2 * r;
  const auto u_side = static_cast<VertexId>(groups * (groups - 1) / 2);
  Multigraph g(u_side + static_cast<std::size_t>(groups) * r);

  auto copy_id = [&](int i, int k) { return u_side + (i - 1) * r + (k - 1); };
  for (int i = 1; i <= groups; ++i)
    for (int k = 1; k <= r; ++k) g.set_label(copy_id(i, k), CopyLabel{k, i});

  VertexId u = 0;
  for (int i = 1; i <= groups; ++i) {
    for (int j = i + 1; j <= groups; ++j, ++u) {
      g.set_label(u, PairLabel{i, j});
      for (int k = 1; k <= r; ++k) {
        g.add_edges(u, copy_id(i, k));
        g.add_edges(u, copy_id(j, k));
      }
    }
  }
  return g;
}

Multigraph build_G(int r) {
  validate({Family::G, r});
  const int triangles = 2 * r + 1;
  Multigraph g = with_hubs_and_triangles(triangles);
  for (int i = 1; i <= triangles; ++i) {
    g.add_edges(0, triangle_vertex(i, 1));
    g.add_edges(1, triangle_vertex(i, 2));
    g.add_edges(2, triangle_vertex(i, 3));
    add_triangle(g, i, static_cast<Multiplicity>(r));
  }
  return g;
}

Multigraph build_H(int r) {
  validate({Family::H, r});
  Multigraph g = build_G(r);
  for (int i = 1; i <= 2 * r + 1; ++i) g.remove_edges(triangle_vertex(i, 3), triangle_vertex(i, 1));
  return g;
}

Multigraph build_F(int r) {
  validate({Family::F, r});
  Multigraph g = with_hubs_and_triangles(r);
  for (int i = 1; i <= r; ++i) {
    g.add_edges(0, triangle_vertex(i, 1));
    g.add_edges(0, triangle_vertex(i, 2));
    g.add_edges(1, triangle_vertex(i, 1));
    g.add_edges(1, triangle_vertex(i, 3));
    g.add_edges(2, triangle_vertex(i, 2));
    g.add_edges(2, triangle_vertex(i, 3));
    add_triangle(g, i, static_cast<Multiplicity>(r - 1));
  }
  return g;
}

Multigraph build(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::B: return build_B(spec.r);
    case Family::G: return build_G(spec.r);
    case Family::H: return build_H(spec.r);
    case Family::F: return build_F(spec.r);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace matchcert
