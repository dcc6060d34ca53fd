#pragma once

#include <algorithm>
#include <cassert>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace cplanar {

using VertexId = int;
using EdgeId = int;

/// Thrown when an input violates the documented precondition of an operation.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  VertexId u = -1;
  VertexId v = -1;
};

/// Undirected multigraph on vertices 0..n-1. Parallel edges are allowed,
/// self-loops are not.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices) : incidence_(static_cast<std::size_t>(num_vertices)) {}

  VertexId add_vertex() {
    incidence_.emplace_back();
    return static_cast<VertexId>(incidence_.size()) - 1;
  }

  EdgeId add_edge(VertexId u, VertexId v) {
    if (!has_vertex(u) || !has_vertex(v)) throw PreconditionError("edge endpoint is not a vertex");
    if (u == v) throw PreconditionError("self-loops are not supported");
    const EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v});
    incidence_[u].push_back(id);
    incidence_[v].push_back(id);
    return id;
  }

  int num_vertices() const { return static_cast<int>(incidence_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  bool has_vertex(VertexId v) const { return v >= 0 && v < num_vertices(); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<EdgeId>& incident(VertexId v) const { return incidence_[v]; }
  int degree(VertexId v) const { return static_cast<int>(incidence_[v].size()); }

  VertexId opposite(EdgeId e, VertexId v) const {
    const Edge& ed = edges_[e];
    assert(ed.u == v || ed.v == v);
    return ed.u == v ? ed.v : ed.u;
  }

  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const {
    for (EdgeId e : incidence_[u]) {
      if (opposite(e, u) == v) return e;
    }
    return std::nullopt;
  }

  /// True when no two edges join the same pair of vertices.
  bool is_simple() const {
    std::vector<std::pair<int, int>> keys;
    keys.reserve(edges_.size());
    for (const Edge& e : edges_) keys.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// Disjoint-set forest with path halving.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

using VertexSet = std::vector<VertexId>;  // sorted, duplicate free

inline VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool contains(const VertexSet& s, VertexId v) { return std::binary_search(s.begin(), s.end(), v); }

inline std::vector<char> membership(int n, const VertexSet& s) {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (VertexId v : s) in[v] = 1;
  return in;
}

/// Component index per vertex, counting only edges accepted by `keep_edge`
/// and vertices accepted by `keep_vertex` (others get -1).
template <class KeepVertex, class KeepEdge>
std::vector<int> component_labels(const Graph& g, KeepVertex keep_vertex, KeepEdge keep_edge) {
  std::vector<int> comp(static_cast<std::size_t>(g.num_vertices()), -1);
  int next = 0;
  std::vector<VertexId> stack;
  for (VertexId start = 0; start < g.num_vertices(); ++start) {
    if (comp[start] != -1 || !keep_vertex(start)) continue;
    comp[start] = next;
    stack.push_back(start);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(x)) {
        if (!keep_edge(e)) continue;
        VertexId y = g.opposite(e, x);
        if (comp[y] == -1 && keep_vertex(y)) {
          comp[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return comp;
}

/// Partition of the vertex set into connected components, ordered by smallest vertex.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  auto comp = component_labels(g, [](VertexId) { return true; }, [](EdgeId) { return true; });
  int count = 0;
  for (int c : comp) count = std::max(count, c + 1);
  std::vector<VertexSet> parts(static_cast<std::size_t>(count));
  for (VertexId v = 0; v < g.num_vertices(); ++v) parts[comp[v]].push_back(v);
  return parts;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

/// Whether G[s] is connected. The empty set counts as connected.
inline bool induces_connected(const Graph& g, const VertexSet& s) {
  if (s.empty()) return true;
  auto in = membership(g.num_vertices(), s);
  auto comp = component_labels(
      g, [&](VertexId v) { return in[v] != 0; },
      [&](EdgeId e) { return in[g.edge(e).u] && in[g.edge(e).v]; });
  for (VertexId v : s) {
    if (comp[v] != comp[s.front()]) return false;
  }
  return true;
}

/// Components of G[s], each sorted.
inline std::vector<VertexSet> induced_components(const Graph& g, const VertexSet& s) {
  auto in = membership(g.num_vertices(), s);
  auto comp = component_labels(
      g, [&](VertexId v) { return in[v] != 0; },
      [&](EdgeId e) { return in[g.edge(e).u] && in[g.edge(e).v]; });
  std::vector<VertexSet> parts;
  std::vector<int> index;
  for (VertexId v : s) {
    int c = comp[v];
    if (c >= static_cast<int>(index.size())) index.resize(static_cast<std::size_t>(c) + 1, -1);
    if (index[c] == -1) {
      index[c] = static_cast<int>(parts.size());
      parts.emplace_back();
    }
    parts[index[c]].push_back(v);
  }
  return parts;
}

/// Subgraph of g induced by `s`, with vertices renumbered in the order of `s`.
/// `edge_map` receives the original id of each new edge.
inline Graph induced_subgraph(const Graph& g, const VertexSet& s, std::vector<EdgeId>* edge_map = nullptr,
                              std::vector<VertexId>* vertex_index = nullptr) {
  std::vector<VertexId> index(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t i = 0; i < s.size(); ++i) index[s[i]] = static_cast<VertexId>(i);
  Graph h(static_cast<int>(s.size()));
  if (edge_map) edge_map->clear();
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (index[ed.u] >= 0 && index[ed.v] >= 0) {
      h.add_edge(index[ed.u], index[ed.v]);
      if (edge_map) edge_map->push_back(e);
    }
  }
  if (vertex_index) *vertex_index = std::move(index);
  return h;
}

}  // namespace cplanar
