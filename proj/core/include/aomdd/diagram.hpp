#ifndef AOMDD_DIAGRAM_HPP
#define AOMDD_DIAGRAM_HPP

#include <memory>
#include <string>

#include "aomdd/node_store.hpp"

namespace aomdd {

// A compiled weighted AOMDD: a root composition (usually one meta-node,
// empty for constant functions), the promoted root constant inside it, and
// the store holding every reachable meta-node. Immutable once built; safe
// to query concurrently.
struct Aomdd {
  std::shared_ptr<NodeStore> store;
  Composition root;

  double root_constant() const { return root.constant; }
  const PseudoTree& tree() const { return store->tree(); }
  const std::vector<int>& domains() const { return store->domains(); }
};

// Reachable-node statistics. Edges are counted one per (value, child)
// pair, arcs one per value; terminals are edge targets but not nodes.
struct DiagramCounts {
  std::size_t meta_nodes = 0;
  std::size_t edges = 0;
  std::size_t value_arcs = 0;
};

DiagramCounts count_diagram(const Aomdd& diagram);

// True iff the diagram's store contains no isomorphic pair and no
// redundant node.
bool check_reduced(const Aomdd& diagram);

// Cross-store structural comparison by simultaneous traversal from the
// roots: variables, child orders and counts must match exactly, weights
// after quantization (up to one quantization step, so that the comparison
// stays deterministic yet immune to rounding at a grid edge).
struct IsomorphismReport {
  bool isomorphic = true;
  std::string mismatch;  // first divergence when not isomorphic
};

IsomorphismReport compare_diagrams(const Aomdd& a, const Aomdd& b);

}  // namespace aomdd

#endif  // AOMDD_DIAGRAM_HPP
