#ifndef AOMDD_DOT_HPP
#define AOMDD_DOT_HPP

#include <iosfwd>

#include "aomdd/diagram.hpp"

namespace aomdd {

// Graphviz export: one record-shaped node per meta-node with the variable
// and its per-value weights, solid edges labeled with the value index,
// terminals as boxes, root constant in the graph label.
void write_dot(const Aomdd& diagram, std::ostream& out);

}  // namespace aomdd

#endif  // AOMDD_DOT_HPP
