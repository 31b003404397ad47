#include "aomdd/pseudo_tree.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace aomdd {

void PseudoTree::finish(const PrimalGraph& g) {
  const int n = num_variables();
  depth_.assign(static_cast<std::size_t>(n), 0);
  dfs_index_.assign(static_cast<std::size_t>(n), 0);
  tin_.assign(static_cast<std::size_t>(n), 0);
  tout_.assign(static_cast<std::size_t>(n), 0);
  dfs_order_.clear();
  dfs_order_.reserve(static_cast<std::size_t>(n));
  height_ = 0;

  int clock = 0;
  std::vector<std::pair<VariableId, bool>> stack;  // (vertex, entering)
  for (auto it = roots_.rbegin(); it != roots_.rend(); ++it) stack.push_back({*it, true});
  while (!stack.empty()) {
    auto [v, entering] = stack.back();
    stack.pop_back();
    if (!entering) {
      tout_[static_cast<std::size_t>(v)] = clock++;
      continue;
    }
    tin_[static_cast<std::size_t>(v)] = clock++;
    dfs_index_[static_cast<std::size_t>(v)] = static_cast<int>(dfs_order_.size());
    dfs_order_.push_back(v);
    if (parent_[static_cast<std::size_t>(v)] >= 0) {
      depth_[static_cast<std::size_t>(v)] =
          depth_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])] + 1;
    }
    height_ = std::max(height_, depth_[static_cast<std::size_t>(v)]);
    stack.push_back({v, false});
    const auto& ch = children_[static_cast<std::size_t>(v)];
    for (auto cit = ch.rbegin(); cit != ch.rend(); ++cit) stack.push_back({*cit, true});
  }
  if (static_cast<int>(dfs_order_.size()) != n) {
    throw Error("parent links do not form a rooted forest");
  }

  // Back-arc property: every primal edge joins comparable variables.
  for (VariableId u = 0; u < n; ++u) {
    for (VariableId v : g.neighbors(u)) {
      if (u < v && !comparable(u, v)) {
        std::ostringstream os;
        os << "edge (" << u << ", " << v << ") is not a back-arc of the tree";
        throw Error(os.str());
      }
    }
  }

  width_ = 0;
  for (const auto& c : context_) width_ = std::max(width_, static_cast<int>(c.size()));
}

void PseudoTree::dump(std::ostream& out) const {
  for (VariableId v = 0; v < num_variables(); ++v) {
    out << v << " " << parent(v) << " " << depth(v);
    for (VariableId c : context(v)) out << " " << c;
    out << "\n";
  }
}

PseudoTree pseudo_tree_from_ordering(const PrimalGraph& g, const Ordering& d) {
  const int n = g.num_vertices();
  if (static_cast<int>(d.size()) != n) {
    throw Error("ordering does not cover all vertices");
  }
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (position[static_cast<std::size_t>(d[i])] != -1) {
      throw Error("ordering repeats a vertex");
    }
    position[static_cast<std::size_t>(d[i])] = static_cast<int>(i);
  }

  // Induced graph, processed last to first; the earlier-neighbor set of
  // each vertex becomes its context.
  std::vector<std::set<VariableId>> adj(static_cast<std::size_t>(n));
  for (VariableId v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);
  std::vector<std::vector<VariableId>> context(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    const VariableId v = d[static_cast<std::size_t>(i)];
    std::vector<VariableId> earlier;
    for (VariableId u : adj[static_cast<std::size_t>(v)]) {
      if (position[static_cast<std::size_t>(u)] < i) earlier.push_back(u);
    }
    std::sort(earlier.begin(), earlier.end(), [&](VariableId a, VariableId b) {
      return position[static_cast<std::size_t>(a)] < position[static_cast<std::size_t>(b)];
    });
    for (std::size_t a = 0; a < earlier.size(); ++a) {
      for (std::size_t b = a + 1; b < earlier.size(); ++b) {
        adj[static_cast<std::size_t>(earlier[a])].insert(earlier[b]);
        adj[static_cast<std::size_t>(earlier[b])].insert(earlier[a]);
      }
    }
    context[static_cast<std::size_t>(v)] = std::move(earlier);
  }

  PseudoTree t;
  t.parent_.assign(static_cast<std::size_t>(n), -1);
  t.children_.assign(static_cast<std::size_t>(n), {});
  t.context_ = std::move(context);
  for (VariableId v = 0; v < n; ++v) {
    const auto& ctx = t.context_[static_cast<std::size_t>(v)];
    if (!ctx.empty()) t.parent_[static_cast<std::size_t>(v)] = ctx.back();
  }
  for (VariableId v : d) {  // children and roots ordered by d
    const VariableId p = t.parent_[static_cast<std::size_t>(v)];
    if (p >= 0) {
      t.children_[static_cast<std::size_t>(p)].push_back(v);
    } else {
      t.roots_.push_back(v);
    }
  }
  t.finish(g);
  return t;
}

PseudoTree pseudo_tree_from_parents(const PrimalGraph& g,
                                    const std::vector<VariableId>& parent) {
  const int n = g.num_vertices();
  if (static_cast<int>(parent.size()) != n) {
    throw Error("parent vector does not cover all vertices");
  }
  PseudoTree t;
  t.parent_ = parent;
  t.children_.assign(static_cast<std::size_t>(n), {});
  t.context_.assign(static_cast<std::size_t>(n), {});
  for (VariableId v = 0; v < n; ++v) {
    const VariableId p = parent[static_cast<std::size_t>(v)];
    if (p < -1 || p >= n || p == v) throw Error("invalid parent link");
    if (p >= 0) {
      t.children_[static_cast<std::size_t>(p)].push_back(v);
    } else {
      t.roots_.push_back(v);
    }
  }
  t.finish(g);  // also validates forest shape and back-arcs

  // context(X): ancestors adjacent to X or to a descendant of X, root to
  // leaf order.
  for (VariableId v = 0; v < n; ++v) {
    std::vector<bool> touched(static_cast<std::size_t>(n), false);
    for (VariableId u = 0; u < n; ++u) {
      if (!t.is_ancestor_or_equal(v, u)) continue;  // u in subtree(v)
      for (VariableId w : g.neighbors(u)) touched[static_cast<std::size_t>(w)] = true;
    }
    std::vector<VariableId>& ctx = t.context_[static_cast<std::size_t>(v)];
    for (VariableId a = t.parent_[static_cast<std::size_t>(v)]; a >= 0;
         a = t.parent_[static_cast<std::size_t>(a)]) {
      if (touched[static_cast<std::size_t>(a)]) ctx.push_back(a);
    }
    std::reverse(ctx.begin(), ctx.end());
  }
  t.width_ = 0;
  for (const auto& c : t.context_) t.width_ = std::max(t.width_, static_cast<int>(c.size()));
  return t;
}

PseudoTree parse_pseudo_tree(std::istream& in, const PrimalGraph& g) {
  std::vector<VariableId> parent(static_cast<std::size_t>(g.num_vertices()), -1);
  std::vector<bool> seen(static_cast<std::size_t>(g.num_vertices()), false);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    long var = 0, par = 0;
    if (!(ls >> var)) continue;  // blank line
    if (!(ls >> par) || var < 0 || var >= g.num_vertices() || par < -1 ||
        par >= g.num_vertices()) {
      std::ostringstream os;
      os << "line " << lineno << ": malformed pseudo tree entry";
      throw Error(os.str());
    }
    if (seen[static_cast<std::size_t>(var)]) {
      std::ostringstream os;
      os << "line " << lineno << ": variable " << var << " listed twice";
      throw Error(os.str());
    }
    seen[static_cast<std::size_t>(var)] = true;
    parent[static_cast<std::size_t>(var)] = static_cast<VariableId>(par);
  }
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (!seen[v]) {
      std::ostringstream os;
      os << "pseudo tree file misses variable " << v;
      throw Error(os.str());
    }
  }
  return pseudo_tree_from_parents(g, parent);
}

Ordering parse_ordering(std::istream& in, int num_variables) {
  Ordering d;
  long v = 0;
  while (in >> v) {
    if (v < 0 || v >= num_variables) throw Error("ordering index out of range");
    d.push_back(static_cast<VariableId>(v));
  }
  if (static_cast<int>(d.size()) != num_variables) {
    throw Error("ordering file does not cover all variables");
  }
  return d;
}

BucketMap factor_buckets(const GraphicalModel& model, const PseudoTree& tree) {
  if (tree.num_variables() != model.num_variables()) {
    throw Error("pseudo tree does not span the model");
  }
  BucketMap buckets(static_cast<std::size_t>(model.num_variables()));
  for (std::size_t f = 0; f < model.factors().size(); ++f) {
    const Factor& factor = model.factors()[f];
    if (factor.scope.empty()) continue;  // constant factor, no bucket
    VariableId deepest = factor.scope.front();
    for (VariableId v : factor.scope) {
      if (tree.depth(v) > tree.depth(deepest)) deepest = v;
    }
    for (VariableId v : factor.scope) {
      if (!tree.is_ancestor_or_equal(v, deepest)) {
        std::ostringstream os;
        os << "factor " << f << " scope is not contained in a root-to-node path";
        throw Error(os.str());
      }
    }
    buckets[static_cast<std::size_t>(deepest)].push_back(static_cast<int>(f));
  }
  return buckets;
}

}  // namespace aomdd
