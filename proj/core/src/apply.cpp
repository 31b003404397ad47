#include "aomdd/apply.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace aomdd {

namespace {

// Partitions pool into groups whose variable subtrees overlap (transitively);
// members of distinct groups are independent and simply multiply.
std::vector<std::vector<NodeId>> group_by_subtree(const NodeStore& store,
                                                  const std::vector<NodeId>& pool) {
  const PseudoTree& tree = store.tree();
  std::vector<std::vector<NodeId>> groups;
  for (NodeId m : pool) {
    std::vector<NodeId> merged{m};
    std::vector<std::vector<NodeId>> rest;
    for (auto& g : groups) {
      const bool overlaps = std::any_of(g.begin(), g.end(), [&](NodeId a) {
        return std::any_of(merged.begin(), merged.end(), [&](NodeId b) {
          return tree.comparable(store.var_of(a), store.var_of(b));
        });
      });
      if (overlaps) {
        merged.insert(merged.end(), g.begin(), g.end());
      } else {
        rest.push_back(std::move(g));
      }
    }
    rest.push_back(std::move(merged));
    groups = std::move(rest);
  }
  return groups;
}

Composition apply_impl(NodeStore& store, NodeId v1, std::vector<NodeId> ws,
                       ApplyCache* cache);

// Product of a pool of meta-nodes (no terminals), grouped into independent
// subtree components; each overlapping component is resolved by apply with
// its shallowest member first.
Composition combine_pool(NodeStore& store, std::vector<NodeId> pool, double constant,
                         ApplyCache* cache) {
  Composition out;
  out.constant = constant;
  for (auto& group : group_by_subtree(store, pool)) {
    if (group.size() == 1) {
      out.metas.push_back(group.front());
      continue;
    }
    std::sort(group.begin(), group.end(), [&](NodeId a, NodeId b) {
      const int da = store.tree().depth(store.var_of(a));
      const int db = store.tree().depth(store.var_of(b));
      return da != db ? da < db : a < b;
    });
    const NodeId v1 = group.front();
    group.erase(group.begin());
    const Composition sub = apply_impl(store, v1, std::move(group), cache);
    if (sub.zero()) return Composition::zero_value();
    out.constant *= sub.constant;
    out.metas.insert(out.metas.end(), sub.metas.begin(), sub.metas.end());
  }
  store.sort_metas(out.metas);
  return out;
}

Composition apply_impl(NodeStore& store, NodeId v1, std::vector<NodeId> ws,
                       ApplyCache* cache) {
  if (ws.empty()) return {{v1}, 1.0};
  std::sort(ws.begin(), ws.end());
  if (cache) {
    if (const Composition* hit = cache->find(v1, ws)) return *hit;
  }

  const VariableId var = store.var_of(v1);
  // Copies, not references: recursive calls below append to the store and
  // may reallocate the node table.
  const MetaNode head = store.node(v1);
  std::vector<MetaNode> same;          // operands at the same variable
  std::vector<NodeId> below;           // operands strictly deeper
  for (NodeId w : ws) {
    if (store.var_of(w) == var) {
      same.push_back(store.node(w));
    } else {
      if (!store.tree().is_ancestor_or_equal(var, store.var_of(w))) {
        throw Error("apply: operand variable is not below the first operand");
      }
      below.push_back(w);
    }
  }

  const int k = store.domain_size(var);
  std::vector<ArcInput> arcs(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    const Arc& arc = head.arcs[static_cast<std::size_t>(j)];
    double weight = arc.weight;
    std::vector<NodeId> pool;
    if (weight != 0.0) {
      for (NodeId c : arc.children) {
        if (c != kTerminalOne) pool.push_back(c);  // never kTerminalZero here
      }
    }
    for (const MetaNode& s : same) {
      if (weight == 0.0) break;
      const Arc& sarc = s.arcs[static_cast<std::size_t>(j)];
      weight *= sarc.weight;
      for (NodeId c : sarc.children) {
        if (c != kTerminalOne && c != kTerminalZero) pool.push_back(c);
      }
    }
    if (weight == 0.0) {
      arcs[static_cast<std::size_t>(j)] = {0.0, {kTerminalZero}};
      continue;
    }
    pool.insert(pool.end(), below.begin(), below.end());
    const Composition sub = combine_pool(store, std::move(pool), 1.0, cache);
    if (sub.zero()) {  // early cutoff
      arcs[static_cast<std::size_t>(j)] = {0.0, {kTerminalZero}};
      continue;
    }
    arcs[static_cast<std::size_t>(j)] = {weight * sub.constant, sub.metas};
  }

  Composition result = store.make_meta_node(var, std::move(arcs));
  if (cache) cache->insert(v1, ws, result);
  return result;
}

}  // namespace

const Composition* ApplyCache::find(NodeId v1, const std::vector<NodeId>& ws) const {
  std::vector<NodeId> key;
  key.reserve(ws.size() + 1);
  key.push_back(v1);
  key.insert(key.end(), ws.begin(), ws.end());
  const auto it = table_.find(key);
  return it == table_.end() ? nullptr : &it->second;
}

void ApplyCache::insert(NodeId v1, const std::vector<NodeId>& ws,
                        const Composition& result) {
  std::vector<NodeId> key;
  key.reserve(ws.size() + 1);
  key.push_back(v1);
  key.insert(key.end(), ws.begin(), ws.end());
  table_.emplace(std::move(key), result);
}

std::size_t ApplyCache::Hash::operator()(const std::vector<NodeId>& k) const {
  std::uint64_t h = 1469598103934665603ull;
  for (NodeId w : k) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Composition apply(NodeStore& store, NodeId v1, std::vector<NodeId> ws,
                  ApplyCache* cache) {
  if (v1 == kTerminalZero) return Composition::zero_value();
  for (NodeId w : ws) {
    if (w == kTerminalZero) return Composition::zero_value();
  }
  std::erase(ws, kTerminalOne);
  if (v1 == kTerminalOne) {
    std::vector<Composition> operands;
    operands.reserve(ws.size());
    for (NodeId w : ws) operands.push_back({{w}, 1.0});
    return combine(store, operands, cache);
  }
  return apply_impl(store, v1, std::move(ws), cache);
}

Composition combine(NodeStore& store, const std::vector<Composition>& operands,
                    ApplyCache* cache) {
  double constant = 1.0;
  std::vector<NodeId> pool;
  for (const Composition& op : operands) {
    if (op.zero()) return Composition::zero_value();
    constant *= op.constant;
    pool.insert(pool.end(), op.metas.begin(), op.metas.end());
  }
  ApplyCache local;
  return combine_pool(store, std::move(pool), constant, cache ? cache : &local);
}

Composition factor_to_chain(NodeStore& store, const Factor& factor) {
  const PseudoTree& tree = store.tree();
  std::vector<VariableId> by_depth = factor.scope;
  std::sort(by_depth.begin(), by_depth.end(), [&](VariableId a, VariableId b) {
    return tree.depth(a) < tree.depth(b);
  });
  for (std::size_t i = 0; i + 1 < by_depth.size(); ++i) {
    if (!tree.is_ancestor_or_equal(by_depth[i], by_depth[i + 1])) {
      throw Error("factor scope does not lie on one root-to-leaf path");
    }
  }
  if (factor.scope.empty()) {
    return factor.table.empty() ? Composition::one(1.0)
                                : Composition{{}, factor.table[0]};
  }

  Assignment partial(store.domains().size(), 0);
  std::function<Composition(std::size_t)> build = [&](std::size_t level) -> Composition {
    if (level == by_depth.size()) {
      const double entry = factor.value_at(partial, store.domains());
      return entry == 0.0 ? Composition::zero_value() : Composition::one(entry);
    }
    const VariableId v = by_depth[level];
    std::vector<ArcInput> arcs(static_cast<std::size_t>(store.domain_size(v)));
    for (int j = 0; j < store.domain_size(v); ++j) {
      partial[static_cast<std::size_t>(v)] = j;
      Composition sub = build(level + 1);
      arcs[static_cast<std::size_t>(j)] = {sub.constant, std::move(sub.metas)};
    }
    return store.make_meta_node(v, std::move(arcs));
  };
  return build(0);
}

Composition combine_bucket(NodeStore& store, std::vector<Composition> operands) {
  if (operands.empty()) return Composition::one();
  const PseudoTree& tree = store.tree();
  auto root_depth = [&](const Composition& c) {
    int depth = std::numeric_limits<int>::max();
    for (NodeId m : c.metas) depth = std::min(depth, tree.depth(store.var_of(m)));
    return c.metas.empty() ? -1 : depth;  // pure constants fold in last
  };
  std::stable_sort(operands.begin(), operands.end(),
                   [&](const Composition& a, const Composition& b) {
                     return root_depth(a) > root_depth(b);
                   });
  Composition acc = std::move(operands.front());
  for (std::size_t i = 1; i < operands.size(); ++i) {
    if (acc.zero()) break;
    acc = combine(store, {acc, operands[i]});
  }
  return acc;
}

}  // namespace aomdd
