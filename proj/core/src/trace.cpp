#include "aomdd/trace.hpp"

#include <functional>

#include "aomdd/pseudo_tree.hpp"

namespace aomdd {

AndOrTrace build_search_tree(const GraphicalModel& model, const PseudoTree& tree) {
  const BucketMap buckets = factor_buckets(model, tree);
  AndOrTrace trace;
  Assignment partial(static_cast<std::size_t>(model.num_variables()), 0);

  std::function<std::uint32_t(VariableId)> expand = [&](VariableId v) -> std::uint32_t {
    const std::uint32_t id = static_cast<std::uint32_t>(trace.nodes.size());
    trace.nodes.push_back(TraceNode{v, {}});
    std::vector<TraceArc> arcs(static_cast<std::size_t>(model.domain_size(v)));
    for (int j = 0; j < model.domain_size(v); ++j) {
      partial[static_cast<std::size_t>(v)] = j;
      double weight = 1.0;
      for (int f : buckets[static_cast<std::size_t>(v)]) {
        weight *= model.factors()[static_cast<std::size_t>(f)].value_at(partial,
                                                                        model.domains());
        if (weight == 0.0) break;
      }
      arcs[static_cast<std::size_t>(j)].weight = weight;
      if (weight == 0.0) continue;
      for (VariableId c : tree.children(v)) {
        arcs[static_cast<std::size_t>(j)].children.push_back(expand(c));
      }
    }
    trace.nodes[id].arcs = std::move(arcs);
    return id;
  };

  for (VariableId r : tree.roots()) trace.roots.push_back(expand(r));
  return trace;
}

double evaluate_trace(const AndOrTrace& trace, const Assignment& a) {
  std::function<double(std::uint32_t)> value = [&](std::uint32_t id) -> double {
    const TraceNode& node = trace.nodes[id];
    const TraceArc& arc = node.arcs[static_cast<std::size_t>(
        a[static_cast<std::size_t>(node.var)])];
    double v = arc.weight;
    for (std::uint32_t c : arc.children) {
      if (v == 0.0) break;
      v *= value(c);
    }
    return v;
  };
  double v = 1.0;
  for (std::uint32_t r : trace.roots) v *= value(r);
  return v;
}

Aomdd reduce(const AndOrTrace& trace, std::shared_ptr<const PseudoTree> tree,
             std::vector<int> domains, StoreOptions options) {
  auto store = std::make_shared<NodeStore>(tree, std::move(domains), options);

  std::vector<char> done(trace.nodes.size(), 0);
  std::vector<Composition> reduced(trace.nodes.size());

  std::function<const Composition&(std::uint32_t)> visit =
      [&](std::uint32_t id) -> const Composition& {
    if (done[id]) return reduced[id];
    const TraceNode& node = trace.nodes[id];
    std::vector<ArcInput> arcs(node.arcs.size());
    for (std::size_t j = 0; j < node.arcs.size(); ++j) {
      const TraceArc& arc = node.arcs[j];
      ArcInput& in = arcs[j];
      in.weight = arc.weight;
      if (arc.weight == 0.0) continue;
      for (std::uint32_t c : arc.children) {
        const TraceNode& child = trace.nodes[c];
        if (!store->tree().is_ancestor_or_equal(node.var, child.var) ||
            node.var == child.var) {
          throw Error("trace is not layered by the pseudo tree");
        }
        const Composition& sub = visit(c);
        if (sub.zero()) {
          in.weight = 0.0;
          in.children = {kTerminalZero};
          break;
        }
        in.weight *= sub.constant;
        in.children.insert(in.children.end(), sub.metas.begin(), sub.metas.end());
      }
    }
    reduced[id] = store->make_meta_node(node.var, std::move(arcs));
    done[id] = 1;
    return reduced[id];
  };

  Composition root;
  for (std::uint32_t r : trace.roots) {
    const Composition& sub = visit(r);
    if (sub.zero()) {
      root = Composition::zero_value();
      break;
    }
    root.constant *= sub.constant;
    root.metas.insert(root.metas.end(), sub.metas.begin(), sub.metas.end());
  }
  store->sort_metas(root.metas);
  return Aomdd{std::move(store), std::move(root)};
}

}  // namespace aomdd
