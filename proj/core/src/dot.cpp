#include "aomdd/dot.hpp"

#include <ostream>
#include <vector>

namespace aomdd {

void write_dot(const Aomdd& diagram, std::ostream& out) {
  out << "digraph aomdd {\n";
  out << "  label=\"root constant = " << diagram.root.constant << "\";\n";
  out << "  node [shape=record];\n";

  std::vector<bool> seen(diagram.store->end_meta(), false);
  std::vector<NodeId> stack(diagram.root.metas.begin(), diagram.root.metas.end());
  bool uses_zero = false;
  bool uses_one = false;
  std::vector<std::string> edges;

  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    if (seen[id]) continue;
    seen[id] = true;
    const MetaNode& node = diagram.store->node(id);
    out << "  n" << id << " [label=\"{X" << node.var << "|{";
    for (std::size_t j = 0; j < node.arcs.size(); ++j) {
      out << (j ? "|" : "") << "<v" << j << "> " << node.arcs[j].weight;
    }
    out << "}}\"];\n";
    for (std::size_t j = 0; j < node.arcs.size(); ++j) {
      for (NodeId c : node.arcs[j].children) {
        std::string target;
        if (c == kTerminalZero) {
          uses_zero = true;
          target = "t0";
        } else if (c == kTerminalOne) {
          uses_one = true;
          target = "t1";
        } else {
          target = "n" + std::to_string(c);
          if (!seen[c]) stack.push_back(c);
        }
        edges.push_back("  n" + std::to_string(id) + ":v" + std::to_string(j) +
                        " -> " + target + " [label=\"" + std::to_string(j) + "\"];\n");
      }
    }
  }
  if (uses_zero) out << "  t0 [shape=box,label=\"0\"];\n";
  if (uses_one) out << "  t1 [shape=box,label=\"1\"];\n";
  for (const std::string& e : edges) out << e;
  out << "}\n";
}

}  // namespace aomdd
