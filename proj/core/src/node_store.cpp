#include "aomdd/node_store.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <sstream>

namespace aomdd {

double quantize(double x, int digits) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  const int exponent = static_cast<int>(std::floor(std::log10(std::fabs(x))));
  if (exponent < -250) return x;  // scaling would overflow; keep as-is
  const double scale = std::pow(10.0, digits - 1 - exponent);
  return std::round(x * scale) / scale;
}

NormalizeResult normalize(std::span<const double> weights) {
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error("normalize: weights must be finite and nonnegative");
    }
    sum += w;
  }
  NormalizeResult result;
  result.constant = sum;
  if (sum == 0.0) {
    result.zero = true;
    return result;
  }
  result.weights.reserve(weights.size());
  for (double w : weights) result.weights.push_back(w / sum);
  return result;
}

NodeStore::NodeStore(std::shared_ptr<const PseudoTree> tree, std::vector<int> domains,
                     StoreOptions options)
    : tree_(std::move(tree)), domains_(std::move(domains)), options_(options) {
  if (!tree_) throw Error("node store needs a pseudo tree");
  if (static_cast<int>(domains_.size()) != tree_->num_variables()) {
    throw Error("domains do not match the pseudo tree");
  }
  nodes_.resize(2);  // terminal placeholders
}

void NodeStore::sort_metas(std::vector<NodeId>& metas) const {
  std::sort(metas.begin(), metas.end(), [this](NodeId a, NodeId b) {
    const int da = tree_->dfs_index(nodes_[a].var);
    const int db = tree_->dfs_index(nodes_[b].var);
    return da != db ? da < db : a < b;
  });
}

Composition NodeStore::make_meta_node(VariableId var, std::vector<ArcInput> arcs) {
  const int k = domain_size(var);
  if (static_cast<int>(arcs.size()) != k) {
    throw Error("make_meta_node: arc count does not match the domain size");
  }

  std::vector<Arc> built(static_cast<std::size_t>(k));
  double sum = 0.0;
  for (int j = 0; j < k; ++j) {
    ArcInput& in = arcs[static_cast<std::size_t>(j)];
    Arc& arc = built[static_cast<std::size_t>(j)];
    if (!(in.weight >= 0.0) || !std::isfinite(in.weight)) {
      throw Error("make_meta_node: arc weight must be finite and nonnegative");
    }
    bool dead = in.weight == 0.0;
    std::vector<NodeId> metas;
    for (NodeId c : in.children) {
      if (c == kTerminalZero) {
        dead = true;
        break;
      }
      if (c == kTerminalOne) continue;
      metas.push_back(c);
    }
    if (dead) {
      arc.weight = 0.0;
      arc.children = {kTerminalZero};
      continue;
    }
    if (metas.empty()) {
      arc.children = {kTerminalOne};
    } else {
      sort_metas(metas);
#ifndef NDEBUG
      for (NodeId c : metas) {
        assert(!tree_->is_ancestor_or_equal(nodes_[c].var, var) &&
               tree_->is_ancestor_or_equal(var, nodes_[c].var) &&
               "child must live strictly below the node variable");
      }
      for (std::size_t a = 0; a + 1 < metas.size(); ++a) {
        assert(!tree_->comparable(nodes_[metas[a]].var, nodes_[metas[a + 1]].var) &&
               "children of one arc must root disjoint subtrees");
      }
#endif
      arc.children = std::move(metas);
    }
    arc.weight = in.weight;
    sum += in.weight;
  }

  if (sum == 0.0) return Composition::zero_value();

  for (Arc& arc : built) {
    arc.weight /= sum;
    arc.quantized = quantize(arc.weight, options_.quantize_digits);
  }

  // Weighted redundancy: every value has the same children and the same
  // quantized weight, so the variable is irrelevant; promote the common
  // (average) raw value and hand back the shared children.
  if (options_.reduce_redundant) {
    bool redundant = true;
    for (int j = 1; j < k && redundant; ++j) {
      redundant = built[static_cast<std::size_t>(j)].quantized == built[0].quantized &&
                  built[static_cast<std::size_t>(j)].children == built[0].children;
    }
    if (redundant) {
      Composition out;
      out.constant = sum / k;
      if (built[0].children != std::vector<NodeId>{kTerminalOne}) {
        out.metas = built[0].children;
      }
      return out;
    }
  }

  Key key = key_of(var, built);
  if (auto it = unique_.find(key); it != unique_.end()) {
    return {{it->second}, sum};
  }
  const NodeId id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(MetaNode{var, std::move(built)});
  unique_.emplace(std::move(key), id);
  return {{id}, sum};
}

NodeId NodeStore::inject_raw_node(VariableId var, std::vector<Arc> arcs) {
  const NodeId id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(MetaNode{var, std::move(arcs)});
  return id;
}

NodeStore::Key NodeStore::key_of(VariableId var, const std::vector<Arc>& arcs) const {
  Key key;
  key.reserve(1 + arcs.size() * 4);
  key.push_back(static_cast<std::uint64_t>(var));
  for (const Arc& arc : arcs) {
    key.push_back(std::bit_cast<std::uint64_t>(arc.quantized));
    key.push_back(static_cast<std::uint64_t>(arc.children.size()));
    for (NodeId c : arc.children) key.push_back(c);
  }
  return key;
}

std::size_t NodeStore::KeyHash::operator()(const Key& k) const {
  // FNV-1a over the words.
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint64_t w : k) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

bool check_reduced_store(const NodeStore& store) {
  std::unordered_map<NodeStore::Key, NodeId, NodeStore::KeyHash> seen;
  for (NodeId id = store.first_meta(); id < store.end_meta(); ++id) {
    const MetaNode& node = store.node(id);
    if (!seen.emplace(store.key_of(node.var, node.arcs), id).second) {
      return false;  // isomorphic twin
    }
    bool redundant = true;
    for (std::size_t j = 1; j < node.arcs.size() && redundant; ++j) {
      redundant = node.arcs[j].quantized == node.arcs[0].quantized &&
                  node.arcs[j].children == node.arcs[0].children;
    }
    if (redundant) return false;
  }
  return true;
}

}  // namespace aomdd
