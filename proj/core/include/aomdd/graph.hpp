#ifndef AOMDD_GRAPH_HPP
#define AOMDD_GRAPH_HPP

#include <cstddef>
#include <set>
#include <vector>

#include "aomdd/model.hpp"

namespace aomdd {

// Elimination ordering: position 0 is first; the last variable is
// eliminated first.
using Ordering = std::vector<VariableId>;

// Undirected graph over the model's variables, one edge per co-scoped pair.
class PrimalGraph {
 public:
  explicit PrimalGraph(int num_vertices);

  void add_edge(VariableId u, VariableId v);
  bool has_edge(VariableId u, VariableId v) const;
  const std::set<VariableId>& neighbors(VariableId v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  std::size_t num_edges() const;

 private:
  std::vector<std::set<VariableId>> adjacency_;
};

PrimalGraph primal_graph(const GraphicalModel& model);

// Induced width w*(d): process vertices last to first, connecting each
// vertex's earlier neighbors into a clique; the answer is the maximum
// earlier-neighbor count encountered.
int induced_width(const PrimalGraph& g, const Ordering& d);

// Greedy min-fill: repeatedly pick, for the last remaining position, the
// vertex whose elimination adds the fewest fill edges. Ties go to the
// lowest variable id; with randomize_ties the tied candidate is picked by
// a seed-driven draw instead.
Ordering min_fill_ordering(const PrimalGraph& g, unsigned seed = 0,
                           bool randomize_ties = false);

}  // namespace aomdd

#endif  // AOMDD_GRAPH_HPP
