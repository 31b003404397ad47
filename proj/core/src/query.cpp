#include "aomdd/query.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace aomdd {

double eval_assignment(const Aomdd& diagram, const Assignment& x) {
  const NodeStore& store = *diagram.store;
  if (x.size() != store.domains().size()) {
    throw Error("assignment does not cover all variables");
  }
  std::function<double(NodeId)> value = [&](NodeId id) -> double {
    const MetaNode& node = store.node(id);
    const Arc& arc = node.arcs[static_cast<std::size_t>(
        x[static_cast<std::size_t>(node.var)])];
    double v = arc.weight;
    for (NodeId c : arc.children) {
      if (v == 0.0 || c == kTerminalOne) break;
      if (c == kTerminalZero) return 0.0;
      v *= value(c);
    }
    return v;
  };
  double result = diagram.root.constant;
  for (NodeId m : diagram.root.metas) {
    if (result == 0.0) break;
    result *= value(m);
  }
  return result;
}

double partition_function(const Aomdd& diagram) {
  const NodeStore& store = *diagram.store;

  // Per node, the summed value divided by the full domain product of its
  // subtree; skipped variables then cost nothing, and the total domain
  // product at the root restores them all at once.
  std::unordered_map<NodeId, double> memo;
  std::function<double(NodeId)> scaled = [&](NodeId id) -> double {
    if (auto it = memo.find(id); it != memo.end()) return it->second;
    const MetaNode& node = store.node(id);
    double sum = 0.0;
    for (const Arc& arc : node.arcs) {
      if (arc.weight == 0.0) continue;
      double term = arc.weight;
      for (NodeId c : arc.children) {
        if (c == kTerminalOne) continue;
        if (c == kTerminalZero) {
          term = 0.0;
          break;
        }
        term *= scaled(c);
      }
      sum += term;
    }
    const double result = sum / static_cast<double>(store.domain_size(node.var));
    memo.emplace(id, result);
    return result;
  };

  double total = diagram.root.constant;
  for (int size : store.domains()) total *= static_cast<double>(size);
  for (NodeId m : diagram.root.metas) total *= scaled(m);
  return total;
}

std::int64_t count_solutions(const Aomdd& diagram) {
  const double value = partition_function(diagram);
  const double rounded = std::round(value);
  if (std::fabs(value - rounded) > 1e-6) {
    std::ostringstream os;
    os << "partition function " << value
       << " is not integral; the source model is not 0/1 or drifted";
    throw Error(os.str());
  }
  return static_cast<std::int64_t>(rounded);
}

}  // namespace aomdd
