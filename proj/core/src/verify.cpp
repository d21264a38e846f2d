#include "matchcert/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "blossom.hpp"
#include "neighbourhoods.hpp"

namespace matchcert {

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::holds: return "holds";
    case Verdict::counterexample: return "counterexample";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::short_circuit: return "short-circuit";
    case Method::enumeration: return "enumeration";
    case Method::certificate: return "certificate";
  }
  return "?";
}

std::string_view to_string(PairMode mode) noexcept {
  switch (mode) {
    case PairMode::all_pairs: return "all-pairs";
    case PairMode::some_pair: return "some-pair";
  }
  return "?";
}

namespace {

std::vector<VertexId> uncovered(std::size_t n, const Matching& m) {
  std::vector<char> covered(n, 0);
  for (const auto& [u, v] : m.edges()) covered[u] = covered[v] = 1;
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n; ++v)
    if (!covered[v]) out.push_back(v);
  return out;
}

/// First exposed pair that shares a neighbour (want_shared) or that does not.
std::optional<ExposedPair> find_pair(const detail::NeighbourhoodRows& rows,
                                     const std::vector<VertexId>& exposed, bool want_shared) {
  for (std::size_t i = 0; i < exposed.size(); ++i) {
    for (std::size_t j = i + 1; j < exposed.size(); ++j) {
      const auto common = rows.shared(exposed[i], exposed[j]);
      if (common.has_value() == want_shared) return ExposedPair{exposed[i], exposed[j], common};
    }
  }
  return std::nullopt;
}

std::optional<SeparationCertificate> separation_certificate(const detail::NeighbourhoodRows& rows,
                                                            const std::vector<VertexId>& exposable) {
  if (find_pair(rows, exposable, true)) return std::nullopt;
  return SeparationCertificate{exposable};
}

VerificationReport short_circuit(const Multigraph& g, std::size_t def) {
  VerificationReport report;
  report.verdict = Verdict::holds;
  report.method = Method::short_circuit;
  report.deficiency = def;
  report.witness = maximum_matching(g);
  report.notes.push_back("deficiency " + std::to_string(def) +
                         " leaves fewer than two exposed vertices");
  return report;
}

/// Strong, then label-derived weak, then greedy weak certificate.
std::optional<Certificate> counterexample_certificate(const Multigraph& g,
                                                      const std::vector<VertexId>& exposable,
                                                      bool strong_only) {
  if (auto strong = strong_counterexample_certificate(g)) return *strong;
  if (strong_only) return std::nullopt;
  if (const auto classes = copy_index_classes(g); !classes.empty())
    if (auto weak = weak_counterexample_certificate(g, classes)) return *weak;
  if (const auto classes = greedy_hub_classes(g, exposable); !classes.empty())
    if (auto weak = weak_counterexample_certificate(g, classes)) return *weak;
  return std::nullopt;
}

}  // namespace

VerificationReport conjecture_holds(const Multigraph& g, std::uint64_t cap) {
  const std::size_t def = deficiency(g);
  if (def <= 1) return short_circuit(g, def);

  VerificationReport report;
  report.deficiency = def;
  const detail::NeighbourhoodRows rows(g);
  const auto exposable = gallai_edmonds(g).exposable;

  if (auto separated = separation_certificate(rows, exposable)) {
    report.verdict = Verdict::holds;
    report.method = Method::certificate;
    report.witness = maximum_matching(g);
    report.certificate = std::move(*separated);
    return report;
  }
  if (auto cert = counterexample_certificate(g, exposable, false)) {
    report.verdict = Verdict::counterexample;
    report.method = Method::certificate;
    report.certificate = std::move(*cert);
    return report;
  }

  report.method = Method::enumeration;
  const auto result = enumerate_maximum_matchings(g, cap, [&](const Matching& m) {
    if (find_pair(rows, uncovered(g.vertex_count(), m), true)) return true;
    report.witness = m;
    return false;
  });
  report.matchings_examined = result.count;
  report.exhaustive = result.exhaustive;
  if (report.witness) {
    report.verdict = Verdict::holds;
  } else if (result.exhaustive) {
    report.verdict = Verdict::counterexample;
  } else {
    report.verdict = Verdict::inconclusive;
    report.notes.push_back("enumeration cap reached and no certificate applies");
  }
  return report;
}

VerificationReport is_counterexample(const Multigraph& g, PairMode mode, std::uint64_t cap) {
  const std::size_t def = deficiency(g);
  if (def <= 1) return short_circuit(g, def);

  VerificationReport report;
  report.deficiency = def;
  report.method = Method::enumeration;
  const detail::NeighbourhoodRows rows(g);

  // some_pair fails on a matching with no sharing pair; all_pairs fails on a
  // matching with a non-sharing pair.
  bool refuted = false;
  const auto result = enumerate_maximum_matchings(g, cap, [&](const Matching& m) {
    const auto exposed = uncovered(g.vertex_count(), m);
    if (mode == PairMode::some_pair) {
      const auto pair = find_pair(rows, exposed, true);
      if (!pair) {
        refuted = true;
        report.witness = m;
        report.witness_pair.reset();
        return false;
      }
      if (!report.witness) {
        report.witness = m;
        report.witness_pair = pair;
      }
    } else {
      const auto pair = find_pair(rows, exposed, false);
      if (pair) {
        refuted = true;
        report.witness = m;
        report.witness_pair = pair;
        return false;
      }
      if (!report.witness) {
        report.witness = m;
        report.witness_pair = find_pair(rows, exposed, true);
      }
    }
    return true;
  });
  report.matchings_examined = result.count;
  report.exhaustive = result.exhaustive;

  if (refuted) {
    report.verdict = Verdict::holds;
    return report;
  }
  if (result.exhaustive) {
    report.verdict = Verdict::counterexample;
    return report;
  }

  const auto exposable = gallai_edmonds(g).exposable;
  if (auto cert = counterexample_certificate(g, exposable, mode == PairMode::all_pairs)) {
    report.verdict = Verdict::counterexample;
    report.method = Method::certificate;
    report.certificate = std::move(*cert);
    return report;
  }
  if (mode == PairMode::some_pair) {
    if (auto separated = separation_certificate(rows, exposable)) {
      report.verdict = Verdict::holds;
      report.method = Method::certificate;
      report.witness = maximum_matching(g);
      report.witness_pair.reset();
      report.certificate = std::move(*separated);
      return report;
    }
  }
  report.verdict = Verdict::inconclusive;
  report.notes.push_back("enumeration cap reached and no certificate applies");
  return report;
}

VerificationReport check_theorem1(const Multigraph& g, std::uint64_t cap) {
  if (g.empty() || g.min_degree() < 2 || g.max_degree() > 3)
    throw std::invalid_argument("check_theorem1 needs 2 <= min degree <= max degree <= 3");
  VerificationReport report = conjecture_holds(g, cap);
  if (report.verdict == Verdict::counterexample)
    report.notes.push_back("discrepancy: counterexample verdict on a graph with degrees in [2,3]");
  return report;
}

VerificationReport all_maximum_matchings_saturate(const Multigraph& g,
                                                  std::span<const VertexId> s,
                                                  std::uint64_t cap) {
  for (VertexId v : s)
    if (v >= g.vertex_count()) throw GraphError("vertex out of range in saturation query");

  VerificationReport report;
  report.method = Method::certificate;
  report.deficiency = deficiency(g);

  const auto exposable = gallai_edmonds(g).exposable;
  std::vector<char> in_s(g.vertex_count(), 0);
  for (VertexId v : s) in_s[v] = 1;
  std::optional<VertexId> exposed_target;
  for (VertexId v : exposable) {
    if (in_s[v]) {
      exposed_target = v;
      break;
    }
  }

  if (!exposed_target) {
    report.verdict = Verdict::holds;
    report.certificate = SaturationCertificate{exposable};
  } else {
    // A maximum matching of G - v is a maximum matching of G exposing v.
    const detail::SupportGraph support(g);
    detail::BlossomSearch search(support);
    std::vector<char> alive(g.vertex_count(), 1);
    alive[*exposed_target] = 0;
    std::vector<int> mate(g.vertex_count(), detail::kUnmatched);
    search.maximize(mate, alive);
    report.verdict = Verdict::counterexample;
    report.witness = detail::to_matching(mate);
    report.notes.push_back("vertex " + std::to_string(*exposed_target) +
                           " is exposed by some maximum matching");
  }

  bool saw_exposure = false;
  const auto result = enumerate_maximum_matchings(g, cap, [&](const Matching& m) {
    for (VertexId v : uncovered(g.vertex_count(), m)) {
      if (in_s[v]) {
        saw_exposure = true;
        return false;
      }
    }
    return true;
  });
  report.matchings_examined = result.count;
  report.exhaustive = result.exhaustive;
  if (result.exhaustive && saw_exposure != exposed_target.has_value())
    throw std::logic_error("saturation criterion disagrees with exhaustive enumeration");
  if (saw_exposure && !exposed_target)
    throw std::logic_error("enumeration found a matching exposing a vertex outside D");
  return report;
}

}  // namespace matchcert
