#include <doctest.h>

#include <cmath>
#include <random>

#include "aomdd/compile.hpp"
#include "aomdd/query.hpp"
#include "test_util.hpp"

using namespace aomdd;
using namespace aomdd_test;

namespace {

Aomdd constant_diagram(int vars, double constant) {
  GraphicalModel model(std::vector<int>(static_cast<std::size_t>(vars), 2), {});
  auto tree = chain_tree(model);
  auto store = std::make_shared<NodeStore>(tree, model.domains(), StoreOptions{});
  return Aomdd{std::move(store), Composition::one(constant)};
}

}  // namespace

TEST_CASE("eval_assignment") {
  SUBCASE("terminal-1 diagram returns the root constant") {
    const Aomdd diagram = constant_diagram(2, 7.5);
    CHECK(eval_assignment(diagram, {0, 1}) == doctest::Approx(7.5));
    CHECK(eval_assignment(diagram, {1, 0}) == doctest::Approx(7.5));
  }
  SUBCASE("compiled Bayes chain matches the factor product") {
    const GraphicalModel model = bayes_chain();
    const CompileResult result = compile_search(model, chain_tree(model));
    CHECK(eval_assignment(result.diagram, {0, 1}) == doctest::Approx(0.18));
    CHECK(eval_assignment(result.diagram, {1, 0}) == doctest::Approx(0.4 * 0.2));
  }
  SUBCASE("all-ones on the constraint fixture is inconsistent") {
    const GraphicalModel model = c9_model();
    const CompileResult result = compile_search(model, c9_tree(model));
    CHECK(eval_assignment(result.diagram, Assignment(8, 1)) == 0.0);
  }
  SUBCASE("matches model evaluation exhaustively on small models") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 15; ++trial) {
      RandomModelParams params;
      params.max_vars = 8;
      params.max_domain = 2;
      const GraphicalModel model = random_model(rng, params);
      const CompileResult result = compile_search(model, random_tree(model, rng));
      const int n = model.num_variables();
      Assignment a(static_cast<std::size_t>(n), 0);
      for (int bits = 0; bits < (1 << n); ++bits) {
        for (int v = 0; v < n; ++v) a[static_cast<std::size_t>(v)] = (bits >> v) & 1;
        const double expect = evaluate_assignment(model, a);
        const double got = eval_assignment(result.diagram, a);
        CHECK(std::fabs(got - expect) <= 1e-9 * std::max(1e-300, std::fabs(expect)));
      }
    }
  }
}

TEST_CASE("partition_function") {
  SUBCASE("normalized Bayes nets integrate to one") {
    const GraphicalModel model = bayes_chain();
    const CompileResult result = compile_search(model, chain_tree(model));
    CHECK(partition_function(result.diagram) == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("constraint fixture counts its solutions") {
    const GraphicalModel model = c9_model();
    const CompileResult result = compile_search(model, c9_tree(model));
    CHECK(partition_function(result.diagram) == doctest::Approx(kC9SolutionCount));
  }
  SUBCASE("skipped variables contribute their domain sizes") {
    const Aomdd diagram = constant_diagram(2, 7.0);
    CHECK(partition_function(diagram) == doctest::Approx(28.0));
  }
  SUBCASE("agrees with the brute-force oracle") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
      const GraphicalModel model = random_model(rng);
      const CompileResult result = compile_search(model, random_tree(model, rng));
      const double oracle = brute_force_partition(model);
      CHECK(std::fabs(partition_function(result.diagram) - oracle) <=
            1e-9 * std::max(1.0, oracle));
    }
  }
  SUBCASE("invariant to the keep-redundant flag") {
    std::mt19937 rng(67);
    for (int trial = 0; trial < 20; ++trial) {
      const GraphicalModel model = random_model(rng);
      const auto tree = random_tree(model, rng);
      const double reduced = partition_function(compile_search(model, tree).diagram);
      const double kept =
          partition_function(compile_search(model, tree, {12, false}).diagram);
      CHECK(kept == doctest::Approx(reduced).epsilon(1e-9));
    }
  }
}

TEST_CASE("count_solutions") {
  SUBCASE("a single OR clause has three models") {
    const GraphicalModel model =
        encode_constraints_as_factors(2, {BoolConstraint::lor({pos(0), pos(1)})});
    const CompileResult result = compile_search(model, chain_tree(model));
    CHECK(count_solutions(result.diagram) == 3);
  }
  SUBCASE("constraint fixture") {
    const GraphicalModel model = c9_model();
    const CompileResult result = compile_search(model, c9_tree(model));
    CHECK(count_solutions(result.diagram) == kC9SolutionCount);
  }
  SUBCASE("unsatisfiable model counts zero") {
    const GraphicalModel model({2}, {Factor{{0}, {0, 1}}, Factor{{0}, {1, 0}}},
                               ModelKind::kZeroOne);
    const CompileResult result = compile_search(model, chain_tree(model));
    CHECK(count_solutions(result.diagram) == 0);
  }
  SUBCASE("non-integral totals are rejected") {
    const GraphicalModel model({2}, {Factor{{0}, {0.4, 0.3}}});  // sums to 0.7
    const CompileResult result = compile_search(model, chain_tree(model));
    CHECK_THROWS_AS(count_solutions(result.diagram), Error);
  }
}

TEST_CASE("diagram statistics") {
  SUBCASE("terminal diagram") {
    const DiagramCounts counts = count_diagram(constant_diagram(2, 1.0));
    CHECK(counts.meta_nodes == 0);
    CHECK(counts.edges == 0);
  }
  SUBCASE("one ternary node with all arcs to terminal 1") {
    GraphicalModel model({3}, {Factor{{0}, {0.2, 0.3, 0.5}}});
    auto tree = chain_tree(model);
    auto store = std::make_shared<NodeStore>(tree, model.domains(), StoreOptions{});
    const Composition c = store->make_meta_node(
        0, {{0.2, {kTerminalOne}}, {0.3, {kTerminalOne}}, {0.5, {kTerminalOne}}});
    const DiagramCounts counts = count_diagram(Aomdd{store, c});
    CHECK(counts.meta_nodes == 1);
    CHECK(counts.edges == 3);
    CHECK(counts.value_arcs == 3);
  }
  SUBCASE("constraint fixture reaches the expected size") {
    const GraphicalModel model = c9_model();
    const CompileResult result = compile_search(model, c9_tree(model));
    const DiagramCounts counts = count_diagram(result.diagram);
    CHECK(counts.meta_nodes == 18);
    CHECK(counts.edges == 47);
  }
  SUBCASE("both pipelines report identical statistics") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 15; ++trial) {
      const GraphicalModel model = random_model(rng);
      const PipelineReport report = compare_pipelines(model, random_tree(model, rng));
      REQUIRE(report.match);
      CHECK(report.ve.stats.aomdd_meta_nodes == report.search.stats.aomdd_meta_nodes);
      CHECK(report.ve.stats.aomdd_edges == report.search.stats.aomdd_edges);
    }
  }
}
