#ifndef AOMDD_GENERATORS_HPP
#define AOMDD_GENERATORS_HPP

#include "aomdd/model.hpp"

namespace aomdd {

// rows x cols binary grid network: one table per variable over its
// left/up neighbors, covering the grid edges. Entries are uniform in
// (0, 1] with a zero_fraction share forced to 0 (as whole deterministic
// rows, so every instance stays consistent); deterministic under seed.
// zero_fraction is capped at 0.5.
GraphicalModel generate_grid(int rows, int cols, unsigned seed, double zero_fraction);

}  // namespace aomdd

#endif  // AOMDD_GENERATORS_HPP
