#ifndef AOMDD_TRACE_HPP
#define AOMDD_TRACE_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "aomdd/diagram.hpp"
#include "aomdd/model.hpp"

namespace aomdd {

// An unreduced AND/OR graph layered by a pseudo tree: one OR node per
// entry, one weighted AND arc per value, children indexing other entries.
// Raw weights follow the bucket-product convention; an arc with weight 0
// may leave its children unexpanded.
struct TraceArc {
  double weight = 0.0;
  std::vector<std::uint32_t> children;
};

struct TraceNode {
  VariableId var = -1;
  std::vector<TraceArc> arcs;
};

struct AndOrTrace {
  std::vector<TraceNode> nodes;
  std::vector<std::uint32_t> roots;
};

// Full AND/OR search tree (no caching, no merging): weights are the bucket
// products along each path; weight-0 arcs short-circuit expansion.
AndOrTrace build_search_tree(const GraphicalModel& model, const PseudoTree& tree);

// Value of a full assignment read off the trace directly (product of the
// selected arc weights).
double evaluate_trace(const AndOrTrace& trace, const Assignment& a);

// Single bottom-up pass over the trace: every node is rebuilt through
// make_meta_node, so normalization constants flow upward, isomorphic nodes
// merge and redundant nodes vanish. The promoted constant of the roots
// becomes the root constant.
Aomdd reduce(const AndOrTrace& trace, std::shared_ptr<const PseudoTree> tree,
             std::vector<int> domains, StoreOptions options = {});

}  // namespace aomdd

#endif  // AOMDD_TRACE_HPP
