#include "matchcert/mgf.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace matchcert {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <class Int>
Int parse_int(std::string_view token, std::size_t line, const char* what) {
  Int value{};
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(token) + "'");
  return value;
}

VertexLabel parse_label(const std::vector<std::string_view>& tok, std::size_t line) {
  // tok: "#", "label", id, kind, args...
  const std::string_view kind = tok[3];
  if (kind == "hub") {
    if (tok.size() != 5 || tok[4].size() != 1)
      throw ParseError(line, "hub label needs one of x, y, z");
    return HubLabel{tok[4][0]};
  }
  if (kind == "pair") {
    if (tok.size() != 6) throw ParseError(line, "pair label needs two indices");
    return PairLabel{parse_int<int>(tok[4], line, "index"), parse_int<int>(tok[5], line, "index")};
  }
  if (kind == "copy") {
    if (tok.size() != 6) throw ParseError(line, "copy label needs two indices");
    return CopyLabel{parse_int<int>(tok[4], line, "index"), parse_int<int>(tok[5], line, "index")};
  }
  throw ParseError(line, "unknown label kind '" + std::string(kind) + "'");
}

std::string label_line(VertexId v, const VertexLabel& label) {
  std::ostringstream out;
  out << "# label " << v << ' ';
  if (const auto* hub = std::get_if<HubLabel>(&label)) {
    out << "hub " << hub->name;
  } else if (const auto* pair = std::get_if<PairLabel>(&label)) {
    out << "pair " << pair->i << ' ' << pair->j;
  } else if (const auto* copy = std::get_if<CopyLabel>(&label)) {
    out << "copy " << copy->k << ' ' << copy->i;
  }
  return out.str();
}

}  // namespace

Multigraph parse_mgf(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::optional<Multigraph> graph;
  std::set<std::pair<VertexId, VertexId>> seen_pairs;
  std::set<VertexId> labelled;

  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto tok = split_whitespace(line);

    if (!graph) {
      if (tok.size() != 2 || tok[0] != "mgf")
        throw ParseError(line_no, "expected header 'mgf <n>'");
      graph.emplace(parse_int<std::size_t>(tok[1], line_no, "vertex count"));
      continue;
    }
    if (tok.empty()) continue;

    const std::size_t n = graph->vertex_count();
    if (tok[0] == "#") {
      if (tok.size() < 2 || tok[1] != "label") continue;
      if (tok.size() < 5) throw ParseError(line_no, "truncated label line");
      const auto v = parse_int<VertexId>(tok[2], line_no, "vertex id");
      if (v >= n) throw ParseError(line_no, "vertex id " + std::to_string(v) + " out of range");
      if (!labelled.insert(v).second)
        throw ParseError(line_no, "vertex " + std::to_string(v) + " labelled twice");
      try {
        graph->set_label(v, parse_label(tok, line_no));
      } catch (const GraphError& e) {
        throw ParseError(line_no, e.what());
      }
      continue;
    }
    if (tok[0].front() == '#') continue;

    if (tok.size() != 3) throw ParseError(line_no, "expected '<u> <v> <multiplicity>'");
    const auto u = parse_int<VertexId>(tok[0], line_no, "vertex id");
    const auto v = parse_int<VertexId>(tok[1], line_no, "vertex id");
    const auto m = parse_int<Multiplicity>(tok[2], line_no, "multiplicity");
    if (u >= n || v >= n)
      throw ParseError(line_no, "vertex id " + std::to_string(std::max(u, v)) + " out of range");
    if (u == v) throw ParseError(line_no, "loop at vertex " + std::to_string(u));
    if (u > v) throw ParseError(line_no, "bundle must be written with u < v");
    if (m == 0) throw ParseError(line_no, "multiplicity must be at least 1");
    if (!seen_pairs.emplace(u, v).second)
      throw ParseError(line_no, "duplicate bundle " + std::to_string(u) + " " + std::to_string(v));
    graph->add_edges(u, v, m);
  }

  if (!graph) throw ParseError(1, "expected header 'mgf <n>'");
  return std::move(*graph);
}

std::string serialize_mgf(const Multigraph& g) {
  std::ostringstream out;
  out << "mgf " << g.vertex_count() << '\n';
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const VertexLabel label = g.label(v);
    if (!is_plain(label)) out << label_line(v, label) << '\n';
  }
  for (const auto& b : g.bundles()) out << b.u << ' ' << b.v << ' ' << b.multiplicity << '\n';
  return out.str();
}

Multigraph read_mgf_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_mgf(buffer.str());
}

void write_mgf_file(const std::filesystem::path& path, const Multigraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize_mgf(g);
}

std::string export_dot(const Multigraph& g, const DotStyle& style) {
  std::set<VertexId> highlighted(style.highlighted.begin(), style.highlighted.end());
  std::set<std::pair<VertexId, VertexId>> bold;
  for (auto [u, v] : style.bold) bold.emplace(std::min(u, v), std::max(u, v));

  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [label=\"" << to_string(g.label(v)) << '"';
    if (highlighted.count(v)) out << ", style=filled, fillcolor=\"#f4a261\"";
    out << "];\n";
  }
  for (const auto& b : g.bundles()) {
    const bool is_bold = bold.count({b.u, b.v}) > 0;
    for (Multiplicity k = 0; k < b.multiplicity; ++k) {
      out << "  " << b.u << " -- " << b.v;
      if (is_bold && k == 0) out << " [penwidth=3]";
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace matchcert
