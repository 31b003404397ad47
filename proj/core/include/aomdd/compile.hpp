#ifndef AOMDD_COMPILE_HPP
#define AOMDD_COMPILE_HPP

#include <memory>
#include <string>

#include "aomdd/diagram.hpp"
#include "aomdd/model.hpp"

namespace aomdd {

struct CompileStats {
  std::size_t cm_or_nodes = 0;      // explored context-minimal OR nodes (search only)
  std::size_t aomdd_meta_nodes = 0;
  std::size_t aomdd_edges = 0;
  double ratio = 0.0;               // cm_or_nodes / aomdd_meta_nodes
  double wall_seconds = 0.0;
  int induced_width = 0;
  int tree_height = 0;
};

struct CompileResult {
  Aomdd diagram;
  CompileStats stats;
};

// Variable-elimination schedule: every factor becomes a chain AOMDD in its
// bucket; buckets are processed deepest first, each combined message lands
// in the parent bucket (the bucket variable is not eliminated, so the last
// message is the model's AOMDD).
CompileResult compile_ve(const GraphicalModel& model,
                         std::shared_ptr<const PseudoTree> tree,
                         StoreOptions options = {});

// Depth-first AND/OR search with OR-context caching; every meta-node is
// rebuilt through make_meta_node on retraction, so the trace is reduced on
// the fly. cm_or_nodes counts distinct (variable, context-value) entries.
CompileResult compile_search(const GraphicalModel& model,
                             std::shared_ptr<const PseudoTree> tree,
                             StoreOptions options = {});

// Sum over variables of the product of their context domain sizes: the
// context-minimal graph size, the explored-node bound asserted on every
// search compile.
double context_minimal_bound(const PseudoTree& tree, const std::vector<int>& domains);

// Runs both pipelines on separate stores and checks that they produce
// isomorphic diagrams with equal counts and root constants.
struct PipelineReport {
  bool match = false;
  std::string mismatch;
  CompileResult ve;
  CompileResult search;
};

PipelineReport compare_pipelines(const GraphicalModel& model,
                                 std::shared_ptr<const PseudoTree> tree,
                                 StoreOptions options = {});

}  // namespace aomdd

#endif  // AOMDD_COMPILE_HPP
