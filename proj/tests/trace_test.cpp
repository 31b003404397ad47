#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>

#include "aomdd/query.hpp"
#include "aomdd/trace.hpp"
#include "test_util.hpp"

using namespace aomdd;
using namespace aomdd_test;

namespace {

// Re-expresses a reduced diagram as a trace so reduce can be re-applied.
AndOrTrace trace_from_diagram(const Aomdd& diagram) {
  AndOrTrace trace;
  std::vector<std::int64_t> mapped(diagram.store->end_meta(), -1);
  std::function<std::uint32_t(NodeId)> visit = [&](NodeId id) -> std::uint32_t {
    if (mapped[id] >= 0) return static_cast<std::uint32_t>(mapped[id]);
    const MetaNode& node = diagram.store->node(id);
    std::vector<TraceArc> arcs(node.arcs.size());
    for (std::size_t j = 0; j < node.arcs.size(); ++j) {
      arcs[j].weight = node.arcs[j].weight;
      for (NodeId c : node.arcs[j].children) {
        if (c == kTerminalZero) arcs[j].weight = 0.0;
        if (is_terminal(c)) continue;
        arcs[j].children.push_back(visit(c));
      }
    }
    const std::uint32_t tid = static_cast<std::uint32_t>(trace.nodes.size());
    trace.nodes.push_back(TraceNode{node.var, std::move(arcs)});
    mapped[id] = tid;
    return tid;
  };
  for (NodeId m : diagram.root.metas) trace.roots.push_back(visit(m));
  return trace;
}

}  // namespace

TEST_CASE("reduce merges proportional subtrees") {
  SUBCASE("inverse scalings make the branch variable vanish") {
    // f(M=1) = 2 f(M=0), g(M=1) = g(M=0) / 2: the two conditioned
    // subproblems are equal, so M is removed entirely.
    const GraphicalModel model = proportional_pair_model(2.0, 0.5);
    const auto tree = chain_tree(model);
    const AndOrTrace trace = build_search_tree(model, *tree);
    const Aomdd diagram = reduce(trace, tree, model.domains());
    for (NodeId m = diagram.store->first_meta(); m < diagram.store->end_meta(); ++m) {
      CHECK(diagram.store->var_of(m) != 0);
    }
    CHECK(partition_function(diagram) ==
          doctest::Approx(brute_force_partition(model)).epsilon(1e-9));
  }
  SUBCASE("unequal masses keep the variable but share the children") {
    // f(M=1) = 2 f(M=0), g unscaled: subproblems proportional, not equal.
    const GraphicalModel model = proportional_pair_model(2.0, 1.0);
    const auto tree = chain_tree(model);
    const Aomdd diagram = reduce(build_search_tree(model, *tree), tree, model.domains());
    REQUIRE(diagram.root.metas.size() == 1);
    const MetaNode& root = diagram.store->node(diagram.root.metas[0]);
    CHECK(root.var == 0);
    CHECK(root.arcs[0].children == root.arcs[1].children);
    CHECK(root.arcs[0].weight == doctest::Approx(1.0 / 3.0));
    CHECK(root.arcs[1].weight == doctest::Approx(2.0 / 3.0));
  }
}

TEST_CASE("reduce is idempotent") {
  const GraphicalModel model = c9_model();
  const auto tree = c9_tree(model);
  const Aomdd once = reduce(build_search_tree(model, *tree), tree, model.domains());
  const Aomdd twice = reduce(trace_from_diagram(once), tree, model.domains());
  CHECK(count_diagram(twice).meta_nodes == count_diagram(once).meta_nodes);
  CHECK(count_diagram(twice).edges == count_diagram(once).edges);
  // Nodes were already normalized, so nothing more is promoted.
  CHECK(twice.root.constant == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(once.root.constant * twice.root.constant ==
        doctest::Approx(once.root.constant).epsilon(1e-9));
}

TEST_CASE("all-zero trace collapses to terminal zero") {
  const GraphicalModel model({2, 2}, {Factor{{0, 1}, {0, 0, 0, 0}}});
  const auto tree = chain_tree(model);
  const Aomdd diagram = reduce(build_search_tree(model, *tree), tree, model.domains());
  CHECK(diagram.root.zero());
  CHECK(diagram.root.metas.empty());
  CHECK(count_diagram(diagram).meta_nodes == 0);
}

TEST_CASE("reduce rejects traces not layered by the tree") {
  const GraphicalModel model = bayes_chain();
  const auto tree = chain_tree(model);
  AndOrTrace bad;
  bad.nodes.push_back(TraceNode{1, {TraceArc{1.0, {1}}, TraceArc{1.0, {}}}});
  bad.nodes.push_back(TraceNode{0, {TraceArc{1.0, {}}, TraceArc{1.0, {}}}});
  bad.roots = {0};
  CHECK_THROWS_AS(reduce(bad, tree, model.domains()), Error);
}

TEST_CASE("reduction preserves every full assignment") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    RandomModelParams params;
    params.max_vars = 8;
    const GraphicalModel model = random_model(rng, params);
    const auto tree = random_tree(model, rng);
    const AndOrTrace trace = build_search_tree(model, *tree);
    const Aomdd diagram = reduce(trace, tree, model.domains());
    for (int i = 0; i < 20; ++i) {
      const Assignment a = random_assignment(model, rng);
      const double direct = evaluate_trace(trace, a);
      const double compiled = eval_assignment(diagram, a);
      CHECK(std::fabs(direct - compiled) <= 1e-9 * std::max({1e-300, std::fabs(direct)}));
      CHECK(direct == doctest::Approx(evaluate_assignment(model, a)).epsilon(1e-9));
    }
  }
}

TEST_CASE("search tree size respects the depth bound") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    RandomModelParams params;
    params.max_vars = 10;
    const GraphicalModel model = random_model(rng, params);
    const auto tree = random_tree(model, rng);
    const AndOrTrace trace = build_search_tree(model, *tree);
    int kmax = 1;
    for (int v = 0; v < model.num_variables(); ++v) {
      kmax = std::max(kmax, model.domain_size(v));
    }
    const double bound = model.num_variables() *
                         std::pow(static_cast<double>(kmax), tree->height());
    CHECK(static_cast<double>(trace.nodes.size()) <= bound);
  }
}
