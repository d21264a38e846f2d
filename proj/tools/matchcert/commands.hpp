#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "matchcert/multigraph.hpp"
#include "matchcert/verify.hpp"

namespace matchcert::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFound = 1;  // counterexample confirmed
inline constexpr int kExitUsage = 2;  // parse or configuration error
inline constexpr int kExitInconclusive = 3;

/// Environment variable that overrides the default enumeration cap.
inline constexpr const char* kCapEnvVar = "MATCHCERT_CAP";

/// kDefaultCap unless MATCHCERT_CAP holds a positive integer.
std::uint64_t default_cap();

/// One-line statistics: n, m, degrees, classification, nu, def, |D|, barrier.
std::string format_info(const Multigraph& g);

/// Multi-line report, first line "verdict=... method=... ...".
std::string format_report(const VerificationReport& report, const Multigraph& g);

/// Runs the CLI with explicit streams. Returns the process exit code.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace matchcert::cli
