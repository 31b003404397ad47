#include "aomdd/compile.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "aomdd/apply.hpp"
#include "aomdd/pseudo_tree.hpp"

namespace aomdd {

namespace {

using Clock = std::chrono::steady_clock;

void fill_common_stats(CompileResult& result, Clock::time_point start) {
  const DiagramCounts counts = count_diagram(result.diagram);
  result.stats.aomdd_meta_nodes = counts.meta_nodes;
  result.stats.aomdd_edges = counts.edges;
  result.stats.ratio =
      counts.meta_nodes == 0
          ? 0.0
          : static_cast<double>(result.stats.cm_or_nodes) /
                static_cast<double>(counts.meta_nodes);
  result.stats.induced_width = result.diagram.tree().width();
  result.stats.tree_height = result.diagram.tree().height();
  result.stats.wall_seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
}

// Product of the pure-constant factors (empty scopes have no bucket).
double constant_factor_product(const GraphicalModel& model) {
  double c = 1.0;
  for (const Factor& f : model.factors()) {
    if (f.scope.empty()) c *= f.table.empty() ? 1.0 : f.table[0];
  }
  return c;
}

}  // namespace

double context_minimal_bound(const PseudoTree& tree, const std::vector<int>& domains) {
  double bound = 0.0;
  for (VariableId v = 0; v < tree.num_variables(); ++v) {
    double cells = 1.0;
    for (VariableId u : tree.context(v)) {
      cells *= static_cast<double>(domains[static_cast<std::size_t>(u)]);
    }
    bound += cells;
  }
  return bound;
}

CompileResult compile_ve(const GraphicalModel& model,
                         std::shared_ptr<const PseudoTree> tree, StoreOptions options) {
  const auto start = Clock::now();
  auto store = std::make_shared<NodeStore>(tree, model.domains(), options);
  const BucketMap factor_map = factor_buckets(model, *tree);

  std::vector<std::vector<Composition>> buckets(
      static_cast<std::size_t>(model.num_variables()));
  for (VariableId v = 0; v < model.num_variables(); ++v) {
    for (int f : factor_map[static_cast<std::size_t>(v)]) {
      buckets[static_cast<std::size_t>(v)].push_back(
          factor_to_chain(*store, model.factors()[static_cast<std::size_t>(f)]));
    }
  }

  // Reverse DFS order: every bucket is processed after all buckets below it.
  Composition root = Composition::one(constant_factor_product(model));
  const auto& order = tree->dfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VariableId v = *it;
    auto& ops = buckets[static_cast<std::size_t>(v)];
    if (ops.empty()) continue;
    Composition message = combine_bucket(*store, std::move(ops));
    const VariableId parent = tree->parent(v);
    if (parent >= 0) {
      buckets[static_cast<std::size_t>(parent)].push_back(std::move(message));
    } else {
      root = combine(*store, {root, message});
    }
    if (root.zero()) break;
  }
  if (root.zero()) root = Composition::zero_value();
  store->sort_metas(root.metas);

  CompileResult result{Aomdd{std::move(store), std::move(root)}, {}};
  fill_common_stats(result, start);
  return result;
}

CompileResult compile_search(const GraphicalModel& model,
                             std::shared_ptr<const PseudoTree> tree,
                             StoreOptions options) {
  const auto start = Clock::now();
  auto store = std::make_shared<NodeStore>(tree, model.domains(), options);
  const BucketMap factor_map = factor_buckets(model, *tree);

  // OR-context caches, one per variable, keyed on the context value tuple.
  std::vector<std::map<std::vector<int>, Composition>> cache(
      static_cast<std::size_t>(model.num_variables()));
  std::size_t cm_or_nodes = 0;
  Assignment partial(static_cast<std::size_t>(model.num_variables()), 0);

  std::function<Composition(VariableId)> search = [&](VariableId v) -> Composition {
    std::vector<int> key;
    key.reserve(tree->context(v).size());
    for (VariableId u : tree->context(v)) {
      key.push_back(partial[static_cast<std::size_t>(u)]);
    }
    auto& slot = cache[static_cast<std::size_t>(v)];
    if (auto it = slot.find(key); it != slot.end()) return it->second;
    ++cm_or_nodes;

    std::vector<ArcInput> arcs(static_cast<std::size_t>(model.domain_size(v)));
    for (int j = 0; j < model.domain_size(v); ++j) {
      partial[static_cast<std::size_t>(v)] = j;
      double weight = 1.0;
      for (int f : factor_map[static_cast<std::size_t>(v)]) {
        weight *= model.factors()[static_cast<std::size_t>(f)].value_at(partial,
                                                                        model.domains());
        if (weight == 0.0) break;
      }
      ArcInput& arc = arcs[static_cast<std::size_t>(j)];
      if (weight == 0.0) continue;  // 0-weight arcs skip child expansion
      arc.weight = weight;
      for (VariableId c : tree->children(v)) {
        const Composition sub = search(c);
        if (sub.zero()) {
          arc.weight = 0.0;
          arc.children = {kTerminalZero};
          break;
        }
        arc.weight *= sub.constant;
        arc.children.insert(arc.children.end(), sub.metas.begin(), sub.metas.end());
      }
    }
    Composition result = store->make_meta_node(v, std::move(arcs));
    return slot.emplace(std::move(key), std::move(result)).first->second;
  };

  Composition root = Composition::one(constant_factor_product(model));
  for (VariableId r : tree->roots()) {
    if (root.zero()) break;
    const Composition sub = search(r);
    if (sub.zero()) {
      root = Composition::zero_value();
      break;
    }
    root.constant *= sub.constant;
    root.metas.insert(root.metas.end(), sub.metas.begin(), sub.metas.end());
  }
  store->sort_metas(root.metas);

  if (static_cast<double>(cm_or_nodes) > context_minimal_bound(*tree, model.domains())) {
    throw Error("explored more OR nodes than the context-minimal graph allows");
  }

  CompileResult result{Aomdd{std::move(store), std::move(root)}, {}};
  result.stats.cm_or_nodes = cm_or_nodes;
  fill_common_stats(result, start);
  return result;
}

PipelineReport compare_pipelines(const GraphicalModel& model,
                                 std::shared_ptr<const PseudoTree> tree,
                                 StoreOptions options) {
  PipelineReport report;
  report.ve = compile_ve(model, tree, options);
  report.search = compile_search(model, tree, options);

  const CompileStats& sv = report.ve.stats;
  const CompileStats& ss = report.search.stats;
  std::ostringstream mismatch;
  if (sv.aomdd_meta_nodes != ss.aomdd_meta_nodes || sv.aomdd_edges != ss.aomdd_edges) {
    mismatch << "node/edge counts differ: ve " << sv.aomdd_meta_nodes << "/"
             << sv.aomdd_edges << ", search " << ss.aomdd_meta_nodes << "/"
             << ss.aomdd_edges;
  } else {
    const double cv = report.ve.diagram.root_constant();
    const double cs = report.search.diagram.root_constant();
    if (std::fabs(cv - cs) > 1e-9 * std::max(std::fabs(cv), std::fabs(cs))) {
      mismatch << "root constants differ: " << cv << " vs " << cs;
    } else {
      const IsomorphismReport iso =
          compare_diagrams(report.ve.diagram, report.search.diagram);
      if (!iso.isomorphic) mismatch << "not isomorphic: " << iso.mismatch;
    }
  }
  report.mismatch = mismatch.str();
  report.match = report.mismatch.empty();
  return report;
}

}  // namespace aomdd
