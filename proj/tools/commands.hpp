// Copyright 2026 The multidet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace multidet::cli {

/// Process exit codes. Stable contract for scripts.
enum ExitCode : int {
  kOk = 0,
  kConfigError = 1,      ///< usage, unreadable or malformed input
  kDegenerateState = 2,  ///< zero-norm two-particle state
  kOracleMismatch = 3,   ///< closed forms disagree with the Fock-space route
  kCollinearDesign = 4,  ///< fit design matrix is rank deficient
};

/// Environment variable that overrides the built-in default seed.
inline constexpr const char* kSeedEnvVar = "MULTIDET_SEED";
inline constexpr unsigned long long kDefaultSimulateSeed = 12345;
inline constexpr unsigned long long kDefaultOracleSeed = 7;
/// oracle-check passes iff the largest closed-form/oracle gap is below this.
inline constexpr double kOracleTolerance = 1e-10;

/// Runs the multidet command line. argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace multidet::cli
