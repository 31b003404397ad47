#ifndef AOMDD_QUERY_HPP
#define AOMDD_QUERY_HPP

#include <cstdint>

#include "aomdd/diagram.hpp"
#include "aomdd/model.hpp"

namespace aomdd {

// Root constant times the product of the arc weights selected by the full
// assignment x; variables removed by reduction contribute factor 1.
double eval_assignment(const Aomdd& diagram, const Assignment& x);

// Sum of eval_assignment over all full assignments, computed as a
// memoized fold over the diagram. Variables absent from a path (skipped by
// reduction or never mentioned) contribute their domain size.
double partition_function(const Aomdd& diagram);

// partition_function rounded to the nearest integer; fails when the value
// is more than 1e-6 away from an integer (non-0/1 source or drift).
std::int64_t count_solutions(const Aomdd& diagram);

}  // namespace aomdd

#endif  // AOMDD_QUERY_HPP
