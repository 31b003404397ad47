#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "aomdd/compile.hpp"
#include "aomdd/node_store.hpp"
#include "test_util.hpp"

using namespace aomdd;
using namespace aomdd_test;

namespace {

std::shared_ptr<NodeStore> binary_store(int vars, StoreOptions options = {}) {
  // Chain-shaped tree over `vars` binary variables with all-pairs edges on
  // consecutive variables so the chain is a valid pseudo tree.
  PrimalGraph g(vars);
  for (VariableId v = 0; v + 1 < vars; ++v) g.add_edge(v, v + 1);
  Ordering d(static_cast<std::size_t>(vars));
  for (int v = 0; v < vars; ++v) d[static_cast<std::size_t>(v)] = v;
  auto tree = std::make_shared<const PseudoTree>(pseudo_tree_from_ordering(g, d));
  return std::make_shared<NodeStore>(tree, std::vector<int>(static_cast<std::size_t>(vars), 2),
                                     options);
}

}  // namespace

TEST_CASE("normalize") {
  SUBCASE("already normalized") {
    const std::array<double, 3> w = {0.2, 0.6, 0.2};
    const NormalizeResult r = normalize(w);
    CHECK_FALSE(r.zero);
    CHECK(r.constant == doctest::Approx(1.0));
    CHECK(r.weights[1] == doctest::Approx(0.6));
  }
  SUBCASE("rescales and reports the constant") {
    const std::array<double, 2> w = {2, 3};
    const NormalizeResult r = normalize(w);
    CHECK(r.constant == doctest::Approx(5.0));
    CHECK(r.weights[0] == doctest::Approx(0.4));
    CHECK(r.weights[1] == doctest::Approx(0.6));
  }
  SUBCASE("all-zero collapses") {
    const std::array<double, 2> w = {0, 0};
    const NormalizeResult r = normalize(w);
    CHECK(r.zero);
    CHECK(r.constant == 0.0);
  }
  SUBCASE("rejects negative and non-finite input") {
    CHECK_THROWS_AS(normalize(std::array<double, 1>{-1.0}), Error);
    CHECK_THROWS_AS(normalize(std::array<double, 1>{std::nan("")}), Error);
  }
}

TEST_CASE("quantize") {
  CHECK(quantize(0.0, 12) == 0.0);
  CHECK(quantize(1.0 / 3.0, 12) == doctest::Approx(0.333333333333).epsilon(1e-15));
  CHECK(quantize(0.1234567890123456, 12) == doctest::Approx(0.123456789012).epsilon(1e-15));
  // Values closer than the grid collapse to the same representative.
  CHECK(quantize(0.5 + 1e-15, 12) == quantize(0.5 - 1e-15, 12));
}

TEST_CASE("make_meta_node redundancy rule") {
  auto store = binary_store(2);
  const Composition c =
      store->make_meta_node(0, {{0.5, {kTerminalOne}}, {0.5, {kTerminalOne}}});
  CHECK(c.metas.empty());
  CHECK(c.constant == doctest::Approx(0.5));
  CHECK(store->num_meta_nodes() == 0);
}

TEST_CASE("make_meta_node unique table") {
  auto store = binary_store(2);
  const Composition first =
      store->make_meta_node(0, {{2.0, {kTerminalOne}}, {3.0, {kTerminalOne}}});
  REQUIRE(first.metas.size() == 1);
  CHECK(first.constant == doctest::Approx(5.0));
  const MetaNode& node = store->node(first.metas[0]);
  CHECK(node.arcs[0].weight == doctest::Approx(0.4));
  CHECK(node.arcs[1].weight == doctest::Approx(0.6));

  const Composition second =
      store->make_meta_node(0, {{2.0, {kTerminalOne}}, {3.0, {kTerminalOne}}});
  REQUIRE(second.metas.size() == 1);
  CHECK(second.metas[0] == first.metas[0]);  // same reference
  CHECK(store->num_meta_nodes() == 1);
}

TEST_CASE("make_meta_node zero collapse") {
  auto store = binary_store(2);
  const Composition c =
      store->make_meta_node(0, {{0.0, {kTerminalZero}}, {0.0, {kTerminalZero}}});
  CHECK(c.zero());
  CHECK(c.constant == 0.0);
  CHECK(store->num_meta_nodes() == 0);

  // A child pointing at terminal 0 forces the arc dead even with weight > 0.
  const Composition d =
      store->make_meta_node(0, {{0.7, {kTerminalZero}}, {0.3, {kTerminalOne}}});
  REQUIRE(d.metas.size() == 1);
  const MetaNode& node = store->node(d.metas[0]);
  CHECK(node.arcs[0].weight == 0.0);
  CHECK(node.arcs[0].children == std::vector<NodeId>{kTerminalZero});
  CHECK(d.constant == doctest::Approx(0.3));
}

TEST_CASE("stored weights sum to one") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> value(0.0, 10.0);
  auto store = binary_store(2);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = value(rng), b = value(rng);
    if (a + b == 0.0) continue;
    const Composition c = store->make_meta_node(0, {{a, {kTerminalOne}}, {b, {kTerminalOne}}});
    if (c.metas.empty()) continue;
    const MetaNode& node = store->node(c.metas[0]);
    double sum = 0.0;
    for (const Arc& arc : node.arcs) sum += arc.weight;
    CHECK(std::fabs(sum - 1.0) <= 1e-9);
  }
}

TEST_CASE("keep-redundant mode stores uniform nodes") {
  auto store = binary_store(2, StoreOptions{12, false});
  const Composition c =
      store->make_meta_node(0, {{0.5, {kTerminalOne}}, {0.5, {kTerminalOne}}});
  REQUIRE(c.metas.size() == 1);
  CHECK(c.constant == doctest::Approx(1.0));
  CHECK_FALSE(check_reduced_store(*store));
}

TEST_CASE("check_reduced_store flags injected twins and redundant nodes") {
  SUBCASE("clean store") {
    auto store = binary_store(2);
    store->make_meta_node(0, {{2.0, {kTerminalOne}}, {3.0, {kTerminalOne}}});
    CHECK(check_reduced_store(*store));
  }
  SUBCASE("duplicated key") {
    auto store = binary_store(2);
    const Composition c =
        store->make_meta_node(0, {{2.0, {kTerminalOne}}, {3.0, {kTerminalOne}}});
    const MetaNode& node = store->node(c.metas[0]);
    store->inject_raw_node(0, node.arcs);
    CHECK_FALSE(check_reduced_store(*store));
  }
  SUBCASE("uniform-weight redundant node") {
    auto store = binary_store(2);
    store->make_meta_node(0, {{2.0, {kTerminalOne}}, {3.0, {kTerminalOne}}});
    Arc arc{0.5, quantize(0.5, 12), {kTerminalOne}};
    store->inject_raw_node(1, {arc, arc});
    CHECK_FALSE(check_reduced_store(*store));
  }
}
