#pragma once

#include <string>
#include <vector>

#include "frameopt/types.hpp"

namespace frameopt {

// One check of a bundled reference example. Status is "pass" or "fail" for
// checks of this library's own computations, or "discrepancy" for rows where
// the recomputed value disagrees with the value printed in the source the
// example was taken from; discrepancy rows document known errata and never
// fail a run.
struct ReferenceRow {
  std::string example;
  std::string check;
  std::string status;
  std::string computed;
  std::string expected;
  std::string note;
};

// Recomputes every bundled reference example. `perturb` nudges one fixture
// vector to confirm the harness actually detects mismatches (self test).
std::vector<ReferenceRow> run_reference_checks(bool perturb = false,
                                               const Tolerances& tol = {});

bool all_reference_checks_pass(const std::vector<ReferenceRow>& rows);

}  // namespace frameopt
