#pragma once

#include <string>
#include <vector>

namespace sw {

/// Outcome of one symbolic identity check.  A failing report always carries
/// a counterexample locating the first mismatching matrix entry.
struct IdentityReport {
  std::string id;
  std::string params;
  bool pass = false;
  std::string counterexample;  // empty iff pass

  static IdentityReport ok(std::string id, std::string params) {
    return {std::move(id), std::move(params), true, ""};
  }
  static IdentityReport fail(std::string id, std::string params, std::string cex) {
    return {std::move(id), std::move(params), false, std::move(cex)};
  }
};

}  // namespace sw
