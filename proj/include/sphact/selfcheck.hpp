#ifndef SPHACT_SELFCHECK_HPP_
#define SPHACT_SELFCHECK_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "sphact/classify.hpp"

namespace sphact {

struct CriterionResult {
  int number;
  std::string name;
  bool passed;
  std::string detail;
};

/// The deterministic verification suites behind the selfcheck command:
/// exhaustive agreement of the three deciders on canonical shapes, random
/// conjugate round-trips, both classification tables, the free-product
/// constructor sweep, and the action-model checks.
std::vector<CriterionResult> run_acceptance_criteria();

/// The closed-form cover table (index bound `max_index`), written directly
/// from the classification families; enumerate_covers must reproduce it.
std::vector<CoverRow> expected_cover_rows(Manifold cover, long max_index);

/// Runs the criteria twice, checks the two logs byte for byte, prints one
/// pass/fail line per criterion. Returns true iff everything passed.
bool run_selfcheck(std::ostream& out);

}  // namespace sphact

#endif
