#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "matchcert/matching.hpp"
#include "matchcert/multigraph.hpp"

namespace matchcert {

inline constexpr std::uint64_t kDefaultCap = 1'000'000;

enum class Verdict { holds, counterexample, inconclusive };

/// How a verdict was reached. short_circuit: deficiency <= 1 makes the pair
/// condition vacuous.
enum class Method { short_circuit, enumeration, certificate };

/// all_pairs: for every maximum matching, every pair of exposed vertices has
/// a common neighbour. some_pair: for every maximum matching, some pair of
/// exposed vertices has one (exactly the failure of the conjecture).
enum class PairMode { all_pairs, some_pair };

std::string_view to_string(Verdict verdict) noexcept;
std::string_view to_string(Method method) noexcept;
std::string_view to_string(PairMode mode) noexcept;

struct ExposedPair {
  VertexId first = 0;
  VertexId second = 0;
  std::optional<VertexId> common_neighbor;
};

/// Every pair of distinct exposable vertices shares a neighbour and the
/// deficiency is at least 2. Since exposed sets are subsets of D, this settles
/// the all-pairs property for every maximum matching at once.
struct StrongCertificate {
  std::size_t deficiency = 0;
  std::vector<VertexId> exposable;
  /// One shared neighbour per pair (exposable[i], exposable[j]), i < j, in
  /// row-major order.
  std::vector<VertexId> shared_neighbor;
};

/// A hub together with a class of its neighbours.
struct HubClass {
  VertexId hub = 0;
  std::vector<VertexId> members;
};

/// D is covered by the classes and the deficiency exceeds the number of
/// classes, so every maximum matching exposes two members of one class, and
/// those share the class hub.
struct WeakCertificate {
  std::size_t deficiency = 0;
  std::vector<VertexId> exposable;
  std::vector<HubClass> classes;
};

/// No two exposable vertices share a neighbour, so any maximum matching
/// satisfies the conjecture.
struct SeparationCertificate {
  std::vector<VertexId> exposable;
};

/// D is disjoint from the queried set, so every maximum matching saturates it.
struct SaturationCertificate {
  std::vector<VertexId> exposable;
};

using Certificate =
    std::variant<StrongCertificate, WeakCertificate, SeparationCertificate, SaturationCertificate>;

struct VerificationReport {
  Verdict verdict = Verdict::inconclusive;
  Method method = Method::enumeration;
  std::uint64_t matchings_examined = 0;
  bool exhaustive = false;
  std::size_t deficiency = 0;
  /// conjecture_holds: a matching whose exposed set is pairwise
  /// neighbour-free. is_counterexample: the matching that refuted the
  /// property, or an example matching when the property was confirmed.
  std::optional<Matching> witness;
  std::optional<ExposedPair> witness_pair;
  std::optional<Certificate> certificate;
  std::vector<std::string> notes;
};

/// Some maximum matching leaves no two exposed vertices with a common
/// neighbour. Tries the deficiency short-circuit, then certificates, then
/// enumeration with early exit.
VerificationReport conjecture_holds(const Multigraph& g, std::uint64_t cap = kDefaultCap);

/// verdict counterexample: the mode's property holds for every maximum
/// matching. verdict holds: it fails for at least one (a witness is given).
/// Enumeration decides whenever it completes within cap; certificates are the
/// fallback.
VerificationReport is_counterexample(const Multigraph& g, PairMode mode,
                                     std::uint64_t cap = kDefaultCap);

std::optional<StrongCertificate> strong_counterexample_certificate(const Multigraph& g);

/// Throws GraphError if a hub is not adjacent to one of its members or a
/// vertex appears in two classes.
std::optional<WeakCertificate> weak_counterexample_certificate(const Multigraph& g,
                                                               std::span<const HubClass> classes);

/// Greedy cover of `targets` by hub neighbourhoods: repeatedly picks the
/// vertex adjacent to the most uncovered targets (ties to the smaller id).
/// Returns an empty vector if some target has no neighbour at all.
std::vector<HubClass> greedy_hub_classes(const Multigraph& g, std::span<const VertexId> targets);

/// Classes from labels: all CopyLabel{k, .} vertices form class k, with hub
/// x, y, z for k = 1, 2, 3. Empty if the graph lacks those labels.
std::vector<HubClass> copy_index_classes(const Multigraph& g);

/// For graphs with 2 <= min degree <= max degree <= 3, where a maximum
/// matching with neighbour-free exposed set is known to exist. Runs
/// conjecture_holds and adds a "discrepancy" note if the verdict is
/// counterexample. Throws std::invalid_argument outside that degree range.
VerificationReport check_theorem1(const Multigraph& g, std::uint64_t cap = kDefaultCap);

/// verdict holds iff no vertex of s is exposable, decided by Gallai-Edmonds.
/// When enumeration completes within cap the answer is cross-checked against
/// every maximum matching; disagreement throws std::logic_error. On failure
/// the witness is a maximum matching exposing a vertex of s.
VerificationReport all_maximum_matchings_saturate(const Multigraph& g,
                                                  std::span<const VertexId> s,
                                                  std::uint64_t cap = kDefaultCap);

}  // namespace matchcert
