// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Runtime limits are wall-clock seconds per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "matchcert/matchcert.hpp"
#include "test_graphs.hpp"

namespace {

using namespace matchcert;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Family_r {
  Family family;
  int r;
};

std::vector<Family_r> family_range() {
  std::vector<Family_r> out;
  for (int r = 2; r <= 5; ++r) out.push_back({Family::B, r});
  for (int r = 3; r <= 6; ++r) out.push_back({Family::G, r});
  for (int r = 3; r <= 6; ++r) out.push_back({Family::H, r});
  for (int r = 5; r <= 8; ++r) out.push_back({Family::F, r});
  return out;
}

std::string name(const Family_r& f) {
  return std::string(to_string(f.family)) + "(" + std::to_string(f.r) + ")";
}

// Every graph touched by criteria 1 to 8, for the Tutte-Berge sweep.
std::vector<Multigraph> g_seen;

Outcome fail(const std::string& why) { return {false, why}; }

Outcome family_exactness() {
  for (const auto& f : family_range()) {
    const FamilySpec spec{f.family, f.r};
    const Multigraph g = build(spec);
    g_seen.push_back(g);
    const FamilyStats want = expected_stats(spec);
    if (g.vertex_count() != want.vertex_count) return fail(name(f) + " vertex count");
    if (g.edge_count() != want.weighted_edge_count) return fail(name(f) + " edge count");
    switch (want.degrees.shape) {
      case DegreeShape::regular:
        if (regular_degree(g) != want.degrees.a) return fail(name(f) + " not regular");
        break;
      case DegreeShape::biregular: {
        const auto parts = classify_biregular_bipartite(g);
        if (!parts || parts->a != want.degrees.a || parts->b != want.degrees.b)
          return fail(name(f) + " biregular profile");
        break;
      }
      case DegreeShape::range:
        if (g.max_degree() != want.degrees.a || g.min_degree() != want.degrees.b)
          return fail(name(f) + " degree range");
        break;
    }
  }
  return {true, std::to_string(family_range().size()) + " graphs"};
}

Outcome deficiency_reproduction() {
  for (const auto& f : family_range()) {
    const Multigraph g = build({f.family, f.r});
    const Matching m = maximum_matching(g);
    if (!is_valid_matching(g, m)) return fail(name(f) + " invalid matching");
    const std::size_t def = g.vertex_count() - 2 * m.size();
    std::size_t want = 0;
    switch (f.family) {
      case Family::B: want = f.r; break;
      case Family::G:
      case Family::H: want = 2 * f.r - 2; break;
      case Family::F: want = f.r - 3; break;
    }
    if (def != want) return fail(name(f) + " deficiency " + std::to_string(def));
  }
  return {true, "def(B)=r def(G)=def(H)=2r-2 def(F)=r-3"};
}

Outcome b2_all_pairs() {
  const Multigraph g = build_B(2);
  const auto report = is_counterexample(g, PairMode::all_pairs);
  if (report.verdict != Verdict::counterexample) return fail("verdict " + std::string(to_string(report.verdict)));
  if (report.method != Method::enumeration || !report.exhaustive) return fail("not exhaustive enumeration");
  return {true, std::to_string(report.matchings_examined) + " matchings examined"};
}

Outcome g3_h3_some_pair() {
  std::ostringstream detail;
  for (const auto& [label, g] : {std::pair{"G(3)", build_G(3)}, std::pair{"H(3)", build_H(3)}}) {
    const auto report = is_counterexample(g, PairMode::some_pair);
    if (report.verdict != Verdict::counterexample) return fail(std::string(label) + " verdict");
    if (!report.exhaustive && report.method != Method::certificate)
      return fail(std::string(label) + " undecided");
    const auto classes = copy_index_classes(g);
    if (!weak_counterexample_certificate(g, classes)) return fail(std::string(label) + " weak certificate");
    detail << label << ' ' << to_string(report.method) << ' ' << report.matchings_examined << ' ';
  }
  detail << "weak certificates fire";
  return {true, detail.str()};
}

Outcome f5_all_pairs() {
  const Multigraph g = build_F(5);
  const auto report = is_counterexample(g, PairMode::all_pairs, 1'000'000);
  if (report.verdict != Verdict::counterexample) return fail("verdict");
  if (!strong_counterexample_certificate(g)) return fail("strong certificate");
  return {true, std::string(to_string(report.method)) + " exhaustive=" +
                    (report.exhaustive ? "true " : "false ") +
                    std::to_string(report.matchings_examined) + " matchings"};
}

Outcome certificates_at_scale() {
  for (int r = 2; r <= 5; ++r)
    if (!strong_counterexample_certificate(build_B(r))) return fail("strong B(" + std::to_string(r) + ")");
  for (int r = 5; r <= 8; ++r)
    if (!strong_counterexample_certificate(build_F(r))) return fail("strong F(" + std::to_string(r) + ")");
  for (int r = 3; r <= 6; ++r) {
    for (const Multigraph& g : {build_G(r), build_H(r)}) {
      if (!weak_counterexample_certificate(g, copy_index_classes(g)))
        return fail("weak G/H(" + std::to_string(r) + ")");
    }
  }
  return {true, "strong B(2..5) F(5..8), weak G/H(3..6)"};
}

Outcome saturation_claims() {
  const Multigraph b2 = build_B(2);
  std::vector<VertexId> u_side;
  for (VertexId v = 0; v < b2.vertex_count(); ++v)
    if (std::holds_alternative<PairLabel>(b2.label(v))) u_side.push_back(v);
  const auto b = all_maximum_matchings_saturate(b2, u_side);
  if (b.verdict != Verdict::holds || !b.exhaustive) return fail("B(2) U");

  const Multigraph g3 = build_G(3);
  const std::vector<VertexId> hubs{*g3.find(HubLabel{'x'}), *g3.find(HubLabel{'y'}),
                                   *g3.find(HubLabel{'z'})};
  const auto g = all_maximum_matchings_saturate(g3, hubs);
  if (g.verdict != Verdict::holds || !g.exhaustive) return fail("G(3) {x,y,z}");
  return {true, "D-criterion agrees with exhaustive enumeration"};
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(20240601);
  std::vector<Multigraph> graphs;
  for (int i = 0; i < 500; ++i) graphs.push_back(testing::random_multigraph(rng, 12, kBruteForceEdgeLimit));
  std::size_t families = 0;
  for (const auto& f : family_range()) {
    Multigraph g = build({f.family, f.r});
    if (g.support_edge_count() <= kBruteForceEdgeLimit) {
      graphs.push_back(std::move(g));
      ++families;
    }
  }
  for (const auto& g : graphs) {
    g_seen.push_back(g);
    if (maximum_matching(g).size() != brute_force_matching_number(g))
      return fail("size mismatch on\n" + serialize_mgf(g));
    const auto listed = all_maximum_matchings(g, 10'000'000);
    if (!listed.exhaustive) return fail("enumeration cap hit");
    if (testing::as_edge_sets(listed.matchings) !=
        testing::as_edge_sets(brute_force_all_maximum_matchings(g)))
      return fail("matching set mismatch on\n" + serialize_mgf(g));
  }
  return {true, "500 random + " + std::to_string(families) + " family graphs, 0 mismatches"};
}

Outcome tutte_berge_sweep() {
  for (const auto& g : g_seen) {
    const auto w = tutte_berge_witness(g);
    const auto removed = std::span<const VertexId>(w.barrier);
    if (count_odd_components(g, removed) - w.barrier.size() != deficiency(g))
      return fail("witness mismatch on\n" + serialize_mgf(g));
  }
  return {true, std::to_string(g_seen.size()) + " graphs"};
}

Outcome subcubic_regression() {
  std::mt19937_64 rng(1001);
  for (int i = 0; i < 200; ++i) {
    const Multigraph g = testing::random_subcubic_connected(rng, 12);
    const auto report = check_theorem1(g);
    if (report.verdict != Verdict::holds)
      return fail(std::string(to_string(report.verdict)) + " on\n" + serialize_mgf(g));
  }
  return {true, "200 graphs hold"};
}

Outcome hunt_determinism() {
  HuntConfig cubic;
  cubic.degree = 3;
  cubic.count = 50;
  const HuntSummary control = hunt(cubic);
  if (control.counterexample_count != 0) return fail("cubic control found a counterexample");
  if (control.inconclusive_count != 0) return fail("cubic control inconclusive");

  HuntConfig quartic;
  quartic.degree = 4;
  quartic.count = 100;
  quartic.seed = 7;
  quartic.workers = 1;
  const HuntSummary serial = hunt(quartic);
  quartic.workers = 4;
  const HuntSummary parallel = hunt(quartic);
  if (format_summary(serial) != format_summary(parallel)) return fail("summaries differ");
  for (const auto& r : serial.records) {
    if (r.verdict != Verdict::counterexample) continue;
    if (conjecture_holds(parse_mgf(r.mgf)).verdict != Verdict::counterexample)
      return fail("recorded counterexample did not re-verify");
  }
  return {true, "cubic 0/50; 4-regular seed 7: " + std::to_string(serial.counterexample_count) +
                    " counterexamples, identical for 1 and 4 workers"};
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "family exactness", 1.0, family_exactness},
      {2, "deficiency reproduction", 5.0, deficiency_reproduction},
      {3, "B(2) all-pairs counterexample", 60.0, b2_all_pairs},
      {4, "G(3), H(3) some-pair counterexamples", 120.0, g3_h3_some_pair},
      {5, "F(5) all-pairs counterexample", 120.0, f5_all_pairs},
      {6, "certificates at scale", 60.0, certificates_at_scale},
      {7, "saturation claims", 60.0, saturation_claims},
      {8, "oracle equivalence", 120.0, oracle_equivalence},
      {9, "Tutte-Berge witnesses", 60.0, tutte_berge_sweep},
      {10, "degree 2..3 regression", 120.0, subcubic_regression},
      {11, "hunt determinism and cubic control", 120.0, hunt_determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.ok && seconds > c.limit_seconds) {
      outcome.ok = false;
      outcome.detail += " (over time limit)";
    }
    if (!outcome.ok) ++failures;
    std::printf("[%s] %2d %-40s %8.3fs / %.0fs  %s\n", outcome.ok ? "PASS" : "FAIL", c.id, c.title,
                seconds, c.limit_seconds, outcome.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
