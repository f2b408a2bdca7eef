#pragma once

#include <vector>

#include "sw/report.hpp"

namespace sw {

struct VerifyOptions {
  int maxN = 4;        // symbolic catalog size
  int shape_n = 2;     // ring-suite shape
  int shape_N = 4;
  unsigned seed = 7;   // bethe-suite randomness
  double tol = 1e-9;
};

/// The identity catalog.  Suites: "ybe", "operators", "ring", "bethe",
/// "all".  Every report is exact except the bethe suite, which records the
/// numeric residuals in its params string.
std::vector<IdentityReport> run_suite(const std::string& suite, const VerifyOptions& opt);

}  // namespace sw
