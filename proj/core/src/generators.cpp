#include "aomdd/generators.hpp"

#include <random>

namespace aomdd {

// Grid variables are ordered raster-wise and every variable is conditioned
// on its left/up neighbors, one table per variable covering its incoming
// grid edges. Each row (parent configuration) is made deterministic with
// probability 2 * zero_fraction (one entry forced to 0), otherwise both
// entries are positive, so the zero share of the tables is zero_fraction
// while every parent configuration keeps a consistent value. Independent
// entry-wise zeros at the same share would make essentially every instance
// inconsistent.
GraphicalModel generate_grid(int rows, int cols, unsigned seed, double zero_fraction) {
  if (rows < 2 || cols < 2) throw Error("grid needs at least 2 rows and 2 columns");
  if (zero_fraction < 0.0 || zero_fraction > 0.5) {
    throw Error("zero fraction must be in [0, 0.5]");
  }
  const int n = rows * cols;
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::bernoulli_distribution deterministic_row(2.0 * zero_fraction);
  std::bernoulli_distribution zero_slot(0.5);

  auto cell = [cols](int r, int c) { return r * cols + c; };
  auto positive = [&]() { return 1.0 - uniform(rng); };  // (0, 1]

  std::vector<Factor> factors;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      Factor f;
      if (r > 0) f.scope.push_back(cell(r - 1, c));
      if (c > 0) f.scope.push_back(cell(r, c - 1));
      f.scope.push_back(cell(r, c));
      std::size_t parent_rows = 1;
      for (std::size_t i = 0; i + 1 < f.scope.size(); ++i) parent_rows *= 2;
      for (std::size_t row = 0; row < parent_rows; ++row) {
        if (f.scope.size() > 1 && deterministic_row(rng)) {
          const bool first = zero_slot(rng);
          f.table.push_back(first ? 0.0 : positive());
          f.table.push_back(first ? positive() : 0.0);
        } else {
          f.table.push_back(positive());
          f.table.push_back(positive());
        }
      }
      factors.push_back(std::move(f));
    }
  }
  return GraphicalModel(std::vector<int>(static_cast<std::size_t>(n), 2),
                        std::move(factors));
}

}  // namespace aomdd
