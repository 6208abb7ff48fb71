#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "exactpot/potential_cases.hpp"

namespace exactpot {

inline constexpr double kAuditTolerance = 1e-9;

/// Random real parameters: |alpha|, |beta|, |gamma| <= 4, c1 in [0.5, 3] and
/// c2 in a range for which the case maps onto (0, 1).
CaseParams random_case_params(CaseId id, std::mt19937_64& rng);

/// One way of reading a printed table: a shape set plus the coefficients it
/// is paired with.
struct ReadingResult {
  std::string name;
  int matches = 0;               // draws within kAuditTolerance
  double worst_distance = 0.0;   // coefficient_distance(recovered, printed)
  double worst_misfit = 0.0;     // shapes vs the pointwise oracle
};

struct CaseAudit {
  CaseId id = CaseId::case1;
  int draws = 0;
  int errors = 0;                   // draws where recovery threw
  double worst_corrected = 0.0;     // recovered vs the corrected table
  double worst_shape_misfit = 0.0;  // the case's own shapes vs the oracle
  std::vector<ReadingResult> readings;

  /// Name of the first reading that matched on every draw, or "" if none.
  std::string consistent_reading() const;
};

/// Recovers (A, B, C) from the pointwise oracle on `draws` random parameter
/// sets and compares them with each reading of the printed table. Cases 1-5
/// have the single reading "printed"; case 6 has four, from taking the
/// printed "e^{c2}" as c2 or e^{c2}, with or without the extra 1/4.
CaseAudit audit_case(CaseId id, int draws, std::uint64_t seed);

}  // namespace exactpot
