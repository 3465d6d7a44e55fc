#pragma once

// The golden verification suite behind `eo-strata verify`: recomputes every
// derivable column of every classification row by two independent routes
// (combinatorics and the module engine), checks the stored Weyl words, the
// g = 4 cover diagram, the Young/Bruhat order match for g <= 4, and the
// p-rank cycle classes for g <= 3.

#include <string>
#include <vector>

namespace eo {

struct VerificationReport {
  int checks_run = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

VerificationReport run_verification();

}  // namespace eo
