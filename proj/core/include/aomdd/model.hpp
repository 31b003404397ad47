#ifndef AOMDD_MODEL_HPP
#define AOMDD_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "aomdd/error.hpp"

namespace aomdd {

// Variables are dense indices 0..n-1.
using VariableId = int;

// A full assignment: values[v] is the value index of variable v.
using Assignment = std::vector<int>;

// A real-valued table over an ordered scope of discrete variables.
// The table is flat, row-major with the LAST scope variable varying fastest.
struct Factor {
  std::vector<VariableId> scope;
  std::vector<double> table;

  // Flat table index selected by a full assignment.
  std::size_t index_of(const Assignment& a, const std::vector<int>& domains) const;
  double value_at(const Assignment& a, const std::vector<int>& domains) const;
};

enum class ModelKind { kGeneralWeighted, kZeroOne };

// Discrete variables with finite domains plus nonnegative local functions
// combined by product. Immutable after construction.
class GraphicalModel {
 public:
  GraphicalModel(std::vector<int> domains, std::vector<Factor> factors,
                 ModelKind kind = ModelKind::kGeneralWeighted);

  int num_variables() const { return static_cast<int>(domains_.size()); }
  int domain_size(VariableId v) const { return domains_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& domains() const { return domains_; }
  const std::vector<Factor>& factors() const { return factors_; }
  ModelKind kind() const { return kind_; }

  // Fraction of zero entries across all factor tables.
  double zero_fraction() const;

 private:
  std::vector<int> domains_;
  std::vector<Factor> factors_;
  ModelKind kind_;
};

// Product over all factors of the entry selected by the full assignment a.
double evaluate_assignment(const GraphicalModel& model, const Assignment& a);

// Exact sum of evaluate_assignment over all full assignments.
// Throws Error when the assignment space exceeds cap.
double brute_force_partition(const GraphicalModel& model,
                             std::uint64_t cap = std::uint64_t{1} << 24);

// Returns the model extended with one unary 0/1 indicator factor per
// evidence pair (variable, value).
GraphicalModel with_evidence(const GraphicalModel& model,
                             const std::vector<std::pair<VariableId, int>>& evidence);

}  // namespace aomdd

#endif  // AOMDD_MODEL_HPP
