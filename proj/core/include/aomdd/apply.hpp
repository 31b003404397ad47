#ifndef AOMDD_APPLY_HPP
#define AOMDD_APPLY_HPP

#include <unordered_map>
#include <vector>

#include "aomdd/node_store.hpp"

namespace aomdd {

// Memo table for one top-level apply invocation tree, keyed on the operand
// identity tuple (first operand, sorted remaining operands). Promoted
// constants are returned alongside results and are not part of the key.
class ApplyCache {
 public:
  const Composition* find(NodeId v1, const std::vector<NodeId>& ws) const;
  void insert(NodeId v1, const std::vector<NodeId>& ws, const Composition& result);
  std::size_t size() const { return table_.size(); }

 private:
  struct Hash {
    std::size_t operator()(const std::vector<NodeId>& k) const;
  };
  std::unordered_map<std::vector<NodeId>, Composition, Hash> table_;
};

// Weighted product of v1 and the operands ws, all of whose variables must
// lie at or below var(v1) in the store's pseudo tree. Returns the reduced
// result plus its promoted constant. Terminal operands are handled up
// front: any terminal-0 operand yields zero; terminal-1 operands are
// identities. Passing cache = nullptr disables memoization (the result is
// identical either way).
Composition apply(NodeStore& store, NodeId v1, std::vector<NodeId> ws,
                  ApplyCache* cache = nullptr);

// Product of arbitrary compositions: operands in disjoint subtrees are
// concatenated, overlapping groups are folded through apply.
Composition combine(NodeStore& store, const std::vector<Composition>& operands,
                    ApplyCache* cache = nullptr);

// Chain AOMDD of one factor: scope variables ordered shallowest first (the
// scope must lie on a single root-to-leaf path), built bottom-up through
// make_meta_node, so the result is reduced and the composition times the
// arc weights reproduces the factor pointwise.
Composition factor_to_chain(NodeStore& store, const Factor& factor);

// Joins all AOMDDs of one bucket: a left fold of pairwise combination over
// the operands sorted by root depth, deepest roots first.
Composition combine_bucket(NodeStore& store, std::vector<Composition> operands);

}  // namespace aomdd

#endif  // AOMDD_APPLY_HPP
