#pragma once

#include <string>
#include <vector>

#include "stickylab/chain.hpp"

namespace stickylab {

enum class CheckClass {
  assertion,   // must hold; a deviation fails the run
  measurement  // recorded outcome; a deviation is reported but not fatal
};

enum class CheckStatus { verified, deviation, skipped };

struct CheckResult {
  std::string id;
  CheckClass check_class = CheckClass::assertion;
  CheckStatus status = CheckStatus::verified;
  std::string detail;
};

struct InstanceSuite {
  WalkParams params;
  std::vector<CheckResult> checks;

  bool passed() const;  // no assertion-class deviation
};

// Runs every per-instance check against the given walk: distribution oracles,
// orthogonality, moment identities, TVD equalities and bounds, the spectral
// gap, and the grouping reduction where p is composite. Measurement-class
// checks record expected deviations of the printed formulas without failing
// the suite.
InstanceSuite run_instance_suite(const WalkParams& params);

// Single top-level JSON object with a schema-version field; byte-stable for
// identical inputs.
std::string verification_report_json(const InstanceSuite& suite);

}  // namespace stickylab
