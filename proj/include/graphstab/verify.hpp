#pragma once

#include <string>
#include <vector>

#include "graphstab/io.hpp"

namespace graphstab {

struct Check {
  std::string name;
  std::string paper_anchor;
  bool passed = false;
  /// True when the check compares exact symbolic objects (signs, bits,
  /// graphs) rather than floating-point amplitudes.
  bool symbolic = false;
  io::Json details;
};

struct VerificationReport {
  std::vector<Check> checks;

  bool passed() const;
  const Check* find(std::string_view name) const;
  io::Json to_json() const;
  /// Fixed-width PASS/FAIL table.
  std::string to_table() const;
};

struct VerifyOptions {
  /// Comparison tolerance for amplitudes and expectations.
  double tolerance = 1e-9;
  /// Test hook: flips the sign of the second conjugated generator before it
  /// is compared, to prove the conjugation check can fail.
  bool flip_second_conjugated_sign = false;
};

/// Runs every reference identity in a fixed order and records one check per
/// claim. Never throws for a failed claim; exceptions inside a check are
/// recorded as failures with the message in details.
VerificationReport verify_all(const VerifyOptions& options = {});

}  // namespace graphstab
