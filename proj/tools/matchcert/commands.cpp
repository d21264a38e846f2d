#include "commands.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "matchcert/families.hpp"
#include "matchcert/hunt.hpp"
#include "matchcert/matching.hpp"
#include "matchcert/mgf.hpp"

namespace matchcert::cli {

std::uint64_t default_cap() {
  const char* raw = std::getenv(kCapEnvVar);
  if (!raw) return kDefaultCap;
  const std::string_view text(raw);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) return kDefaultCap;
  return value;
}

namespace {

std::string join(const std::vector<VertexId>& ids) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? " " : "") << ids[i];
  return out.str();
}

std::string format_matching(const Matching& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.size(); ++i)
    out << (i ? " " : "") << m.edges()[i].first << '-' << m.edges()[i].second;
  return out.str();
}

Multigraph load(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_mgf(buffer.str());
  }
  return read_mgf_file(path);
}

int exit_for(Verdict verdict) {
  switch (verdict) {
    case Verdict::holds: return kExitOk;
    case Verdict::counterexample: return kExitFound;
    case Verdict::inconclusive: return kExitInconclusive;
  }
  return kExitUsage;
}

struct CertificateLine {
  std::string operator()(const StrongCertificate& c) const {
    return "certificate=strong exposable=" + std::to_string(c.exposable.size()) +
           " pairs=" + std::to_string(c.shared_neighbor.size());
  }
  std::string operator()(const WeakCertificate& c) const {
    std::string line = "certificate=weak exposable=" + std::to_string(c.exposable.size()) +
                       " classes=" + std::to_string(c.classes.size());
    for (const auto& cls : c.classes)
      line += " hub" + std::to_string(cls.hub) + ":" + std::to_string(cls.members.size());
    return line;
  }
  std::string operator()(const SeparationCertificate& c) const {
    return "certificate=separation exposable=" + std::to_string(c.exposable.size());
  }
  std::string operator()(const SaturationCertificate& c) const {
    return "certificate=saturation exposable=" + std::to_string(c.exposable.size());
  }
};

}  // namespace

std::string format_info(const Multigraph& g) {
  std::ostringstream out;
  out << "n=" << g.vertex_count() << " m=" << g.edge_count();
  if (!g.empty()) out << " max_degree=" << g.max_degree() << " min_degree=" << g.min_degree();
  if (auto d = regular_degree(g)) out << " regular=" << *d;
  if (auto bi = classify_biregular_bipartite(g); bi && bi->a != bi->b)
    out << " biregular=(" << bi->a << ',' << bi->b << ')';
  const auto nu = matching_number(g);
  const auto ge = gallai_edmonds(g);
  const auto witness = tutte_berge_witness(g);
  out << " nu=" << nu << " def=" << g.vertex_count() - 2 * nu << " D=" << ge.exposable.size()
      << " tutte_S=" << witness.barrier.size() << " tutte_odd=" << witness.odd_components;
  return out.str();
}

std::string format_report(const VerificationReport& report, const Multigraph& g) {
  std::ostringstream out;
  out << "verdict=" << to_string(report.verdict) << " method=" << to_string(report.method)
      << " def=" << report.deficiency << " examined=" << report.matchings_examined
      << " exhaustive=" << (report.exhaustive ? "true" : "false") << '\n';
  if (report.witness) {
    out << "witness_matching=" << format_matching(*report.witness) << '\n';
    out << "witness_exposed=" << join(exposed_vertices(g, *report.witness)) << '\n';
  }
  if (report.witness_pair) {
    out << "witness_pair=" << report.witness_pair->first << ' ' << report.witness_pair->second;
    if (report.witness_pair->common_neighbor)
      out << " common=" << *report.witness_pair->common_neighbor;
    else
      out << " common=none";
    out << '\n';
  }
  if (report.certificate) out << std::visit(CertificateLine{}, *report.certificate) << '\n';
  for (const auto& note : report.notes) out << "note=" << note << '\n';
  return out.str();
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximum-matching counterexample toolkit"};
  app.require_subcommand(1);

  std::string path;
  std::uint64_t cap = default_cap();

  // build
  auto* build_cmd = app.add_subcommand("build", "Write a counterexample family graph as MGF");
  std::string family_name;
  int r = 0;
  std::string out_path;
  build_cmd->add_option("--family", family_name, "B, G, H or F")->required();
  build_cmd->add_option("--r", r, "Family parameter")->required();
  build_cmd->add_option("--out", out_path, "Output file (default: stdout)");

  // info
  auto* info_cmd = app.add_subcommand("info", "Print graph statistics");
  info_cmd->add_option("path", path, "MGF file, '-' or omitted for stdin");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Decide the conjecture or a counterexample property");
  std::string mode = "conjecture";
  verify_cmd->add_option("path", path, "MGF file, '-' or omitted for stdin");
  verify_cmd->add_option("--mode", mode, "conjecture, all-pairs or some-pair")
      ->check(CLI::IsMember({"conjecture", "all-pairs", "some-pair"}));
  verify_cmd->add_option("--cap", cap, "Enumeration cap")->check(CLI::PositiveNumber);

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "List all maximum matchings");
  enum_cmd->add_option("path", path, "MGF file, '-' or omitted for stdin");
  enum_cmd->add_option("--cap", cap, "Enumeration cap")->check(CLI::PositiveNumber);

  // hunt
  auto* hunt_cmd = app.add_subcommand("hunt", "Search random regular graphs for counterexamples");
  HuntConfig config;
  long long count = static_cast<long long>(config.count);
  bool allow_multi = false;
  std::string dump_dir;
  hunt_cmd->add_option("--degree", config.degree, "Vertex degree")->required();
  hunt_cmd->add_option("--min-n", config.n_min, "Smallest vertex count");
  hunt_cmd->add_option("--max-n", config.n_max, "Largest vertex count");
  hunt_cmd->add_option("--count", count, "Number of graphs");
  hunt_cmd->add_option("--seed", config.seed, "Base seed");
  hunt_cmd->add_option("--cap", cap, "Enumeration cap per graph")->check(CLI::PositiveNumber);
  hunt_cmd->add_option("--workers", config.workers, "Worker threads");
  hunt_cmd->add_flag("--allow-multi", allow_multi, "Allow parallel edges");
  hunt_cmd->add_option("--dump-dir", dump_dir, "Directory for counterexample MGF files");

  // export-dot
  auto* dot_cmd = app.add_subcommand("export-dot", "Write Graphviz DOT");
  bool show_exposed = false;
  dot_cmd->add_option("path", path, "MGF file, '-' or omitted for stdin");
  dot_cmd->add_flag("--exposed", show_exposed,
                    "Bold a maximum matching and fill the vertices it exposes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    // Subcommand help is raised from inside the parsed subcommand.
    if (e.get_exit_code() == 0) {
      for (auto* sub : app.get_subcommands()) out << sub->help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (build_cmd->parsed()) {
      const auto family = parse_family(family_name);
      if (!family) {
        err << "error: unknown family '" << family_name << "' (expected B, G, H or F)\n";
        return kExitUsage;
      }
      const FamilySpec spec{*family, r};
      try {
        validate(spec);
      } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
      }
      const Multigraph g = build(spec);
      const std::string stats = format_stats(expected_stats(spec));
      if (out_path.empty()) {
        out << serialize_mgf(g);
        err << stats << '\n';
      } else {
        write_mgf_file(out_path, g);
        out << stats << '\n';
      }
      return kExitOk;
    }

    if (hunt_cmd->parsed()) {
      if (count < 1) {
        err << "error: --count must be at least 1\n";
        return kExitUsage;
      }
      config.count = static_cast<std::size_t>(count);
      config.cap = cap;
      config.simple_only = !allow_multi;
      HuntSummary summary;
      try {
        summary = hunt(config);
      } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
      }
      out << format_summary(summary);
      if (summary.counterexample_count == 0) return kExitOk;
      if (!dump_dir.empty()) {
        std::filesystem::create_directories(dump_dir);
        for (const auto& rec : summary.records) {
          if (rec.mgf.empty()) continue;
          const auto file = std::filesystem::path(dump_dir) /
                            ("hunt-" + std::to_string(rec.index) + "-" + std::to_string(rec.seed) + ".mgf");
          std::ofstream(file, std::ios::binary) << rec.mgf;
          err << "wrote " << file.string() << '\n';
        }
      }
      return kExitFound;
    }

    Multigraph g;
    try {
      g = load(path, in);
    } catch (const ParseError& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const std::runtime_error& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }

    if (info_cmd->parsed()) {
      out << format_info(g) << '\n';
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      VerificationReport report;
      if (mode == "conjecture") {
        report = conjecture_holds(g, cap);
      } else {
        report = is_counterexample(g, mode == "all-pairs" ? PairMode::all_pairs : PairMode::some_pair, cap);
      }
      out << "mode=" << mode << ' ' << format_report(report, g);
      return exit_for(report.verdict);
    }

    if (enum_cmd->parsed()) {
      const auto result = enumerate_maximum_matchings(g, cap, [&](const Matching& m) {
        out << format_matching(m) << '\n';
        return true;
      });
      out << "count=" << result.count << " exhaustive=" << (result.exhaustive ? "true" : "false")
          << '\n';
      return kExitOk;
    }

    if (dot_cmd->parsed()) {
      DotStyle style;
      if (show_exposed) {
        const Matching m = maximum_matching(g);
        style.highlighted = exposed_vertices(g, m);
        style.bold = m.edges();
      }
      out << export_dot(g, style);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace matchcert::cli
