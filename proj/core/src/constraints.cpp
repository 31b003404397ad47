#include "aomdd/constraints.hpp"

#include <set>

namespace aomdd {

Factor constraint_factor(const BoolConstraint& c) {
  if (c.op != BoolConstraint::Connective::kOr &&
      c.op != BoolConstraint::Connective::kXor) {
    throw Error("unknown connective");
  }
  if (c.literals.empty()) {
    throw Error("constraint has no literals");
  }
  std::set<VariableId> seen;
  Factor f;
  for (const Literal& lit : c.literals) {
    if (!seen.insert(lit.var).second) {
      throw Error("constraint mentions a variable twice");
    }
    f.scope.push_back(lit.var);
  }
  const std::size_t rows = std::size_t{1} << c.literals.size();
  f.table.resize(rows);
  for (std::size_t row = 0; row < rows; ++row) {
    // Last scope variable varies fastest: bit 0 of row is the last literal.
    bool any = false;
    bool parity = false;
    for (std::size_t i = 0; i < c.literals.size(); ++i) {
      const std::size_t bit = (row >> (c.literals.size() - 1 - i)) & 1u;
      const bool value = (bit != 0) != c.literals[i].negated;
      any = any || value;
      parity = parity != value;
    }
    const bool holds = (c.op == BoolConstraint::Connective::kOr) ? any : parity;
    f.table[row] = holds ? 1.0 : 0.0;
  }
  return f;
}

GraphicalModel encode_constraints_as_factors(int num_variables,
                                             const std::vector<BoolConstraint>& constraints) {
  std::vector<Factor> factors;
  factors.reserve(constraints.size());
  for (const BoolConstraint& c : constraints) {
    factors.push_back(constraint_factor(c));
  }
  return GraphicalModel(std::vector<int>(static_cast<std::size_t>(num_variables), 2),
                        std::move(factors), ModelKind::kZeroOne);
}

}  // namespace aomdd
