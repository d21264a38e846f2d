#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matchcert/multigraph.hpp"

namespace matchcert {

// MGF ("multigraph format"), UTF-8 with LF line endings:
//
//   mgf <n>
//   # label <id> hub <x|y|z>
//   # label <id> pair <i> <j>
//   # label <id> copy <k> <i>
//   <u> <v> <multiplicity>        one line per bundle, u < v, each pair once
//
// Label lines may appear anywhere after the header. Other lines starting with
// '#' are comments, and blank lines are ignored.

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

Multigraph parse_mgf(std::string_view text);

/// Canonical form: header, label lines in id order, bundles in (u, v) order.
std::string serialize_mgf(const Multigraph& g);

Multigraph read_mgf_file(const std::filesystem::path& path);
void write_mgf_file(const std::filesystem::path& path, const Multigraph& g);

struct DotStyle {
  std::vector<VertexId> highlighted;                  // drawn filled
  std::vector<std::pair<VertexId, VertexId>> bold;    // one copy drawn bold
};

/// Graphviz export with one `--` line per parallel edge.
std::string export_dot(const Multigraph& g, const DotStyle& style = {});

}  // namespace matchcert
