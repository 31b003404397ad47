#ifndef AOMDD_PSEUDO_TREE_HPP
#define AOMDD_PSEUDO_TREE_HPP

#include <iosfwd>
#include <vector>

#include "aomdd/graph.hpp"

namespace aomdd {

// Rooted forest over the variables in which every primal-graph edge is a
// back-arc, plus the per-variable OR context (ancestors connected to the
// variable or its descendants, ordered root to leaf). Disconnected primal
// graphs yield one tree per component under a virtual root.
class PseudoTree {
 public:
  int num_variables() const { return static_cast<int>(parent_.size()); }
  const std::vector<VariableId>& roots() const { return roots_; }
  VariableId parent(VariableId v) const { return parent_[static_cast<std::size_t>(v)]; }
  const std::vector<VariableId>& children(VariableId v) const {
    return children_[static_cast<std::size_t>(v)];
  }
  const std::vector<VariableId>& context(VariableId v) const {
    return context_[static_cast<std::size_t>(v)];
  }
  int depth(VariableId v) const { return depth_[static_cast<std::size_t>(v)]; }

  // Maximum node depth, roots at depth 0.
  int height() const { return height_; }
  // Maximum context size; equals the induced width of the defining ordering.
  int width() const { return width_; }

  // Preorder position, the canonical child/meta-node ordering everywhere.
  int dfs_index(VariableId v) const { return dfs_index_[static_cast<std::size_t>(v)]; }
  const std::vector<VariableId>& dfs_order() const { return dfs_order_; }

  bool is_ancestor_or_equal(VariableId a, VariableId b) const {
    return tin_[static_cast<std::size_t>(a)] <= tin_[static_cast<std::size_t>(b)] &&
           tout_[static_cast<std::size_t>(b)] <= tout_[static_cast<std::size_t>(a)];
  }
  bool comparable(VariableId a, VariableId b) const {
    return is_ancestor_or_equal(a, b) || is_ancestor_or_equal(b, a);
  }

  // Text dump, one line per variable: "var parent depth context...".
  // Roots print parent -1.
  void dump(std::ostream& out) const;

  friend PseudoTree pseudo_tree_from_ordering(const PrimalGraph& g, const Ordering& d);
  friend PseudoTree pseudo_tree_from_parents(const PrimalGraph& g,
                                             const std::vector<VariableId>& parent);

 private:
  PseudoTree() = default;
  void finish(const PrimalGraph& g);  // depths, DFS order, contexts, width

  std::vector<VariableId> parent_;  // -1 for roots
  std::vector<std::vector<VariableId>> children_;
  std::vector<std::vector<VariableId>> context_;
  std::vector<VariableId> roots_;
  std::vector<int> depth_;
  std::vector<int> dfs_index_;
  std::vector<VariableId> dfs_order_;
  std::vector<int> tin_, tout_;
  int height_ = 0;
  int width_ = 0;
};

// Bucket-tree construction: the parent of a variable is its latest earlier
// neighbor in the induced ordered graph; its context is its earlier
// neighbor set, ordered by position in d. Child order follows d.
PseudoTree pseudo_tree_from_ordering(const PrimalGraph& g, const Ordering& d);

// Accepts an arbitrary parent forest, verifies the back-arc property, and
// computes contexts from their definition. Children are ordered by
// variable id.
PseudoTree pseudo_tree_from_parents(const PrimalGraph& g,
                                    const std::vector<VariableId>& parent);

// Reads "var parent ..." lines as written by dump (depth and context
// columns are ignored) and rebuilds the tree against g.
PseudoTree parse_pseudo_tree(std::istream& in, const PrimalGraph& g);

// Reads one variable index per line; first line is the first position.
Ordering parse_ordering(std::istream& in, int num_variables);

// Factor indices per bucket: each factor lands in the bucket of the
// deepest scope variable; its whole scope must lie on that root-to-node
// path, otherwise the tree is invalid for this model.
using BucketMap = std::vector<std::vector<int>>;
BucketMap factor_buckets(const GraphicalModel& model, const PseudoTree& tree);

}  // namespace aomdd

#endif  // AOMDD_PSEUDO_TREE_HPP
