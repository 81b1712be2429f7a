#pragma once

#include "hominduce/graded.hpp"

#include <string>
#include <vector>

namespace hominduce {

/**
 * Cohomology of (B, d) with a splitting B_g = im(d) + H_g + C_g.
 * h_split inverts d from im(d) back onto C and vanishes on H + C.
 */
struct CohomologyModel {
  SpacePtr B;
  GradedMap d;
  SpacePtr H;
  GradedMap i;        ///< H -> B
  GradedMap p;        ///< B -> H
  GradedMap h_split;  ///< B -> B, degree -1

  /// Names of violated model identities; empty when all hold exactly.
  std::vector<std::string> failed_identities() const;
};

/// Throws NotADifferential when d is not degree +1 or d∘d ≠ 0.
CohomologyModel cohomology(const SpacePtr& space, const GradedMap& d);

}  // namespace hominduce
