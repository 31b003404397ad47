#include "aomdd/model.hpp"

#include <cmath>
#include <sstream>

namespace aomdd {

std::size_t Factor::index_of(const Assignment& a, const std::vector<int>& domains) const {
  std::size_t idx = 0;
  for (VariableId v : scope) {
    idx = idx * static_cast<std::size_t>(domains[static_cast<std::size_t>(v)]) +
          static_cast<std::size_t>(a[static_cast<std::size_t>(v)]);
  }
  return idx;
}

double Factor::value_at(const Assignment& a, const std::vector<int>& domains) const {
  return table[index_of(a, domains)];
}

GraphicalModel::GraphicalModel(std::vector<int> domains, std::vector<Factor> factors,
                               ModelKind kind)
    : domains_(std::move(domains)), factors_(std::move(factors)), kind_(kind) {
  const int n = num_variables();
  for (std::size_t i = 0; i < domains_.size(); ++i) {
    if (domains_[i] < 1) {
      std::ostringstream os;
      os << "variable " << i << " has domain size " << domains_[i];
      throw Error(os.str());
    }
  }
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    std::size_t size = 1;
    for (VariableId v : factors_[f].scope) {
      if (v < 0 || v >= n) {
        std::ostringstream os;
        os << "factor " << f << " references undeclared variable " << v;
        throw Error(os.str());
      }
      size *= static_cast<std::size_t>(domains_[static_cast<std::size_t>(v)]);
    }
    if (factors_[f].table.size() != size) {
      std::ostringstream os;
      os << "factor " << f << " table has " << factors_[f].table.size()
         << " entries, scope requires " << size;
      throw Error(os.str());
    }
    for (double x : factors_[f].table) {
      if (!(x >= 0.0) || !std::isfinite(x)) {
        std::ostringstream os;
        os << "factor " << f << " has a negative or non-finite entry";
        throw Error(os.str());
      }
      if (kind_ == ModelKind::kZeroOne && x != 0.0 && x != 1.0) {
        std::ostringstream os;
        os << "factor " << f << " of a zero-one model has entry " << x;
        throw Error(os.str());
      }
    }
  }
}

double GraphicalModel::zero_fraction() const {
  std::size_t zeros = 0;
  std::size_t total = 0;
  for (const Factor& f : factors_) {
    total += f.table.size();
    for (double x : f.table) {
      if (x == 0.0) ++zeros;
    }
  }
  return total == 0 ? 0.0 : static_cast<double>(zeros) / static_cast<double>(total);
}

double evaluate_assignment(const GraphicalModel& model, const Assignment& a) {
  if (a.size() != static_cast<std::size_t>(model.num_variables())) {
    throw Error("assignment does not cover all variables");
  }
  for (int v = 0; v < model.num_variables(); ++v) {
    if (a[static_cast<std::size_t>(v)] < 0 ||
        a[static_cast<std::size_t>(v)] >= model.domain_size(v)) {
      throw Error("assignment value out of domain range");
    }
  }
  double value = 1.0;
  for (const Factor& f : model.factors()) {
    value *= f.value_at(a, model.domains());
  }
  return value;
}

double brute_force_partition(const GraphicalModel& model, std::uint64_t cap) {
  const int n = model.num_variables();
  std::uint64_t space = 1;
  for (int v = 0; v < n; ++v) {
    const std::uint64_t k = static_cast<std::uint64_t>(model.domain_size(v));
    if (space > cap / k) {
      throw Error("assignment space exceeds the brute-force cap");
    }
    space *= k;
  }
  Assignment a(static_cast<std::size_t>(n), 0);
  double total = 0.0;
  // Odometer enumeration, last variable fastest.
  while (true) {
    double value = 1.0;
    for (const Factor& f : model.factors()) {
      value *= f.value_at(a, model.domains());
      if (value == 0.0) break;
    }
    total += value;
    int v = n - 1;
    while (v >= 0 && ++a[static_cast<std::size_t>(v)] == model.domain_size(v)) {
      a[static_cast<std::size_t>(v)] = 0;
      --v;
    }
    if (v < 0) break;
  }
  return total;
}

GraphicalModel with_evidence(const GraphicalModel& model,
                             const std::vector<std::pair<VariableId, int>>& evidence) {
  std::vector<Factor> factors = model.factors();
  for (const auto& [var, value] : evidence) {
    if (var < 0 || var >= model.num_variables()) {
      throw Error("evidence variable out of range");
    }
    if (value < 0 || value >= model.domain_size(var)) {
      throw Error("evidence value out of domain range");
    }
    Factor indicator;
    indicator.scope = {var};
    indicator.table.assign(static_cast<std::size_t>(model.domain_size(var)), 0.0);
    indicator.table[static_cast<std::size_t>(value)] = 1.0;
    factors.push_back(std::move(indicator));
  }
  // Indicator tables are 0/1, so a zero-one model stays zero-one.
  return GraphicalModel(model.domains(), std::move(factors), model.kind());
}

}  // namespace aomdd
