#include "aomdd/graph.hpp"

#include <algorithm>
#include <random>

namespace aomdd {

PrimalGraph::PrimalGraph(int num_vertices)
    : adjacency_(static_cast<std::size_t>(num_vertices)) {}

void PrimalGraph::add_edge(VariableId u, VariableId v) {
  if (u == v) return;
  adjacency_[static_cast<std::size_t>(u)].insert(v);
  adjacency_[static_cast<std::size_t>(v)].insert(u);
}

bool PrimalGraph::has_edge(VariableId u, VariableId v) const {
  return adjacency_[static_cast<std::size_t>(u)].count(v) != 0;
}

std::size_t PrimalGraph::num_edges() const {
  std::size_t twice = 0;
  for (const auto& nbrs : adjacency_) twice += nbrs.size();
  return twice / 2;
}

PrimalGraph primal_graph(const GraphicalModel& model) {
  PrimalGraph g(model.num_variables());
  for (const Factor& f : model.factors()) {
    for (std::size_t i = 0; i < f.scope.size(); ++i) {
      for (std::size_t j = i + 1; j < f.scope.size(); ++j) {
        g.add_edge(f.scope[i], f.scope[j]);
      }
    }
  }
  return g;
}

int induced_width(const PrimalGraph& g, const Ordering& d) {
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
  std::vector<std::set<VariableId>> adj(static_cast<std::size_t>(n));
  for (VariableId v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);

  int width = 0;
  for (int i = n - 1; i >= 0; --i) {
    const VariableId v = d[static_cast<std::size_t>(i)];
    std::vector<VariableId> earlier;
    for (VariableId u : adj[static_cast<std::size_t>(v)]) {
      if (position[static_cast<std::size_t>(u)] < i) earlier.push_back(u);
    }
    width = std::max(width, static_cast<int>(earlier.size()));
    for (std::size_t a = 0; a < earlier.size(); ++a) {
      for (std::size_t b = a + 1; b < earlier.size(); ++b) {
        adj[static_cast<std::size_t>(earlier[a])].insert(earlier[b]);
        adj[static_cast<std::size_t>(earlier[b])].insert(earlier[a]);
      }
    }
  }
  return width;
}

namespace {

std::size_t fill_count(const std::vector<std::set<VariableId>>& adj, VariableId v) {
  const auto& nbrs = adj[static_cast<std::size_t>(v)];
  std::size_t missing = 0;
  for (auto it = nbrs.begin(); it != nbrs.end(); ++it) {
    auto jt = it;
    for (++jt; jt != nbrs.end(); ++jt) {
      if (adj[static_cast<std::size_t>(*it)].count(*jt) == 0) ++missing;
    }
  }
  return missing;
}

}  // namespace

Ordering min_fill_ordering(const PrimalGraph& g, unsigned seed, bool randomize_ties) {
  const int n = g.num_vertices();
  std::vector<std::set<VariableId>> adj(static_cast<std::size_t>(n));
  for (VariableId v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);
  std::vector<bool> removed(static_cast<std::size_t>(n), false);
  std::mt19937 rng(seed);

  Ordering reversed;
  reversed.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    std::size_t best = 0;
    std::vector<VariableId> tied;
    bool first = true;
    for (VariableId v = 0; v < n; ++v) {
      if (removed[static_cast<std::size_t>(v)]) continue;
      const std::size_t score = fill_count(adj, v);
      if (first || score < best) {
        best = score;
        tied.assign(1, v);
        first = false;
      } else if (score == best) {
        tied.push_back(v);
      }
    }
    VariableId pick = tied.front();
    if (randomize_ties && tied.size() > 1) {
      pick = tied[std::uniform_int_distribution<std::size_t>(0, tied.size() - 1)(rng)];
    }
    // Eliminate: connect remaining neighbors, detach the vertex.
    const auto nbrs = adj[static_cast<std::size_t>(pick)];
    for (auto it = nbrs.begin(); it != nbrs.end(); ++it) {
      auto jt = it;
      for (++jt; jt != nbrs.end(); ++jt) {
        adj[static_cast<std::size_t>(*it)].insert(*jt);
        adj[static_cast<std::size_t>(*jt)].insert(*it);
      }
    }
    for (VariableId u : nbrs) adj[static_cast<std::size_t>(u)].erase(pick);
    adj[static_cast<std::size_t>(pick)].clear();
    removed[static_cast<std::size_t>(pick)] = true;
    reversed.push_back(pick);
  }
  return Ordering(reversed.rbegin(), reversed.rend());
}

}  // namespace aomdd
