#ifndef AOMDD_UAI_HPP
#define AOMDD_UAI_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "aomdd/model.hpp"

namespace aomdd {

// UAI text format: preamble "MARKOV" or "BAYES", variable count, domain
// sizes, factor count, one scope line per factor (arity then variable
// indices), then the factor tables (entry count followed by the entries).
// Tokens may be broken across lines arbitrarily. Errors carry the line
// number of the offending token.
GraphicalModel parse_uai(std::istream& in);
GraphicalModel parse_uai_file(const std::string& path);

void write_uai(const GraphicalModel& model, std::ostream& out);

// Evidence file: count, then (variable, value) pairs.
std::vector<std::pair<VariableId, int>> parse_evidence(std::istream& in);
std::vector<std::pair<VariableId, int>> parse_evidence_file(const std::string& path);

// Assignment file: one "variable value" pair per line, must cover every
// variable of the model exactly once.
Assignment parse_assignment(std::istream& in, const GraphicalModel& model);

}  // namespace aomdd

#endif  // AOMDD_UAI_HPP
