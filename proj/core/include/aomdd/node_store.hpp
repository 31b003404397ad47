#ifndef AOMDD_NODE_STORE_HPP
#define AOMDD_NODE_STORE_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "aomdd/pseudo_tree.hpp"

namespace aomdd {

// Node handles. 0 and 1 are the shared terminals; everything else is a
// meta-node owned by one NodeStore.
using NodeId = std::uint32_t;
inline constexpr NodeId kTerminalZero = 0;
inline constexpr NodeId kTerminalOne = 1;
inline bool is_terminal(NodeId id) { return id < 2; }

// One value arc of a meta-node. `weight` is the full-precision normalized
// weight used by arithmetic and queries; `quantized` is its rounded image
// used for hashing, merging and comparison. The children list is either
// {kTerminalZero} (dead value, weight 0), {kTerminalOne}, or meta-nodes of
// pairwise disjoint subtrees in DFS order.
struct Arc {
  double weight = 0.0;
  double quantized = 0.0;
  std::vector<NodeId> children;
};

// An OR variable with one weighted arc per domain value.
struct MetaNode {
  VariableId var = -1;
  std::vector<Arc> arcs;
};

// A product of meta-nodes rooted in pairwise disjoint subtrees, scaled by
// a promoted constant. The empty product with constant c is the constant
// function c; constant 0 is the zero function (metas always empty then).
struct Composition {
  std::vector<NodeId> metas;
  double constant = 1.0;

  bool zero() const { return constant == 0.0; }
  static Composition zero_value() { return {{}, 0.0}; }
  static Composition one(double c = 1.0) { return {{}, c}; }
};

// Rounds to `digits` significant decimal digits. Deterministic for every
// input; used to make weight equality and hashing robust against
// floating-point noise.
double quantize(double x, int digits);

struct NormalizeResult {
  std::vector<double> weights;  // empty when zero
  double constant = 0.0;
  bool zero = false;
};

// constant = sum of the inputs; weights are the inputs divided by it.
// All-zero input yields the zero signal. Negative or non-finite input is
// an error.
NormalizeResult normalize(std::span<const double> weights);

// Raw arc as supplied by builders: weight not yet normalized, children as
// meta ids or a terminal singleton.
struct ArcInput {
  double weight = 0.0;
  std::vector<NodeId> children;
};

struct StoreOptions {
  int quantize_digits = 12;
  bool reduce_redundant = true;
};

// Unique-table node store for one compilation. make_meta_node is the only
// way nodes are created, so every stored node is normalized, has no
// quantized-key twin, and (unless redundancy reduction is off) is not
// redundant.
class NodeStore {
 public:
  NodeStore(std::shared_ptr<const PseudoTree> tree, std::vector<int> domains,
            StoreOptions options = {});

  // Normalizes the arcs, collapses zero nodes, applies the weighted
  // redundancy rule, and hash-conses through the unique table. The
  // returned composition times the stored node(s) reproduces the raw arc
  // function; the constant is promoted to the caller.
  Composition make_meta_node(VariableId var, std::vector<ArcInput> arcs);

  const MetaNode& node(NodeId id) const { return nodes_[id]; }
  VariableId var_of(NodeId id) const { return nodes_[id].var; }
  // Number of meta-nodes ever created (terminals excluded).
  std::size_t num_meta_nodes() const { return nodes_.size() - 2; }
  NodeId first_meta() const { return 2; }
  NodeId end_meta() const { return static_cast<NodeId>(nodes_.size()); }

  const PseudoTree& tree() const { return *tree_; }
  std::shared_ptr<const PseudoTree> tree_ptr() const { return tree_; }
  const std::vector<int>& domains() const { return domains_; }
  int domain_size(VariableId v) const { return domains_[static_cast<std::size_t>(v)]; }
  const StoreOptions& options() const { return options_; }

  // Sorts a composition/children list into canonical DFS order.
  void sort_metas(std::vector<NodeId>& metas) const;

  // Appends a node without normalization or unique-table registration.
  // Exists so tests can build non-reduced stores; never used by the
  // compilers.
  NodeId inject_raw_node(VariableId var, std::vector<Arc> arcs);

 private:
  using Key = std::vector<std::uint64_t>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };

  Key key_of(VariableId var, const std::vector<Arc>& arcs) const;

  std::shared_ptr<const PseudoTree> tree_;
  std::vector<int> domains_;
  StoreOptions options_;
  std::vector<MetaNode> nodes_;  // [0] and [1] are terminal placeholders
  std::unordered_map<Key, NodeId, KeyHash> unique_;

  friend bool check_reduced_store(const NodeStore& store);
};

// True iff no two stored nodes share a quantized key and no stored node is
// redundant (identical children lists and equal quantized weights on every
// value). Recomputes keys from node data, so injected duplicates are seen.
bool check_reduced_store(const NodeStore& store);

}  // namespace aomdd

#endif  // AOMDD_NODE_STORE_HPP
