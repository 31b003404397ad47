#include "aomdd/diagram.hpp"

#include <cmath>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace aomdd {

DiagramCounts count_diagram(const Aomdd& diagram) {
  DiagramCounts counts;
  std::vector<bool> seen(diagram.store->end_meta(), false);
  std::vector<NodeId> stack(diagram.root.metas.begin(), diagram.root.metas.end());
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    if (seen[id]) continue;
    seen[id] = true;
    ++counts.meta_nodes;
    const MetaNode& node = diagram.store->node(id);
    for (const Arc& arc : node.arcs) {
      ++counts.value_arcs;
      counts.edges += arc.children.size();
      for (NodeId c : arc.children) {
        if (!is_terminal(c) && !seen[c]) stack.push_back(c);
      }
    }
  }
  return counts;
}

bool check_reduced(const Aomdd& diagram) { return check_reduced_store(*diagram.store); }

namespace {

// Quantized weights are compared up to one step of the coarser grid, so a
// value that straddles a rounding boundary in one of two otherwise equal
// compilations still matches.
bool quantized_match(double a, double b, int digits) {
  if (a == b) return true;
  const double mag = std::max(std::fabs(a), std::fabs(b));
  return std::fabs(a - b) <= mag * 1.5 * std::pow(10.0, 1 - digits);
}

struct Comparer {
  const Aomdd& a;
  const Aomdd& b;
  int digits;
  std::unordered_map<NodeId, NodeId> mapped;
  std::string mismatch;

  bool fail(const std::string& where) {
    if (mismatch.empty()) mismatch = where;
    return false;
  }

  bool match(NodeId na, NodeId nb) {
    if (auto it = mapped.find(na); it != mapped.end()) {
      if (it->second != nb) return fail("node maps to two counterparts");
      return true;
    }
    const MetaNode& ma = a.store->node(na);
    const MetaNode& mb = b.store->node(nb);
    std::ostringstream at;
    at << "variable " << ma.var;
    if (ma.var != mb.var) return fail(at.str() + " vs variable " + std::to_string(mb.var));
    mapped.emplace(na, nb);
    for (std::size_t j = 0; j < ma.arcs.size(); ++j) {
      const Arc& xa = ma.arcs[j];
      const Arc& xb = mb.arcs[j];
      if (!quantized_match(xa.quantized, xb.quantized, digits)) {
        std::ostringstream os;
        os << at.str() << " value " << j << ": weight " << xa.quantized << " vs "
           << xb.quantized;
        return fail(os.str());
      }
      if (xa.children.size() != xb.children.size()) {
        std::ostringstream os;
        os << at.str() << " value " << j << ": child count " << xa.children.size()
           << " vs " << xb.children.size();
        return fail(os.str());
      }
      for (std::size_t c = 0; c < xa.children.size(); ++c) {
        const NodeId ca = xa.children[c];
        const NodeId cb = xb.children[c];
        if (is_terminal(ca) || is_terminal(cb)) {
          if (ca != cb) {
            std::ostringstream os;
            os << at.str() << " value " << j << ": terminal mismatch";
            return fail(os.str());
          }
          continue;
        }
        if (!match(ca, cb)) return false;
      }
    }
    return true;
  }
};

}  // namespace

IsomorphismReport compare_diagrams(const Aomdd& a, const Aomdd& b) {
  IsomorphismReport report;
  Comparer comparer{a, b, a.store->options().quantize_digits, {}, {}};
  if (a.root.metas.size() != b.root.metas.size()) {
    report.isomorphic = false;
    report.mismatch = "root composition sizes differ";
    return report;
  }
  for (std::size_t i = 0; i < a.root.metas.size(); ++i) {
    if (!comparer.match(a.root.metas[i], b.root.metas[i])) {
      report.isomorphic = false;
      report.mismatch = comparer.mismatch;
      return report;
    }
  }
  const DiagramCounts ca = count_diagram(a);
  const DiagramCounts cb = count_diagram(b);
  if (ca.meta_nodes != cb.meta_nodes || ca.edges != cb.edges) {
    report.isomorphic = false;
    std::ostringstream os;
    os << "counts differ: " << ca.meta_nodes << "/" << ca.edges << " vs "
       << cb.meta_nodes << "/" << cb.edges;
    report.mismatch = os.str();
  }
  return report;
}

}  // namespace aomdd
