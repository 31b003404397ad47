#ifndef AOMDD_CONSTRAINTS_HPP
#define AOMDD_CONSTRAINTS_HPP

#include <vector>

#include "aomdd/model.hpp"

namespace aomdd {

struct Literal {
  VariableId var = 0;
  bool negated = false;
};

inline Literal pos(VariableId v) { return {v, false}; }
inline Literal neg(VariableId v) { return {v, true}; }

// A single OR or XOR connective over binary literals. A bare literal is an
// OR with one operand.
struct BoolConstraint {
  enum class Connective { kOr, kXor };
  Connective op = Connective::kOr;
  std::vector<Literal> literals;

  static BoolConstraint lor(std::vector<Literal> lits) {
    return {Connective::kOr, std::move(lits)};
  }
  static BoolConstraint lxor(std::vector<Literal> lits) {
    return {Connective::kXor, std::move(lits)};
  }
};

// Truth table of one constraint as a 0/1 factor over the literal variables
// in listed order.
Factor constraint_factor(const BoolConstraint& c);

// Zero-one model over num_variables binary variables, one factor per
// constraint, in input order.
GraphicalModel encode_constraints_as_factors(int num_variables,
                                             const std::vector<BoolConstraint>& constraints);

}  // namespace aomdd

#endif  // AOMDD_CONSTRAINTS_HPP
