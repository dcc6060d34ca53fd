#pragma once

#include <cplanar/embedding.hpp>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

#include <optional>
#include <vector>

namespace cplanar {

namespace detail {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;

/// Rotation system of a (possibly disconnected) planar graph, or nullopt.
inline std::optional<std::vector<std::vector<EdgeId>>> boost_rotation(const Graph& g) {
  BoostGraph bg(static_cast<std::size_t>(g.num_vertices()));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [desc, ok] = boost::add_edge(g.edge(e).u, g.edge(e).v, bg);
    (void)ok;
    boost::put(boost::edge_index, bg, desc, e);
  }
  using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> emb(static_cast<std::size_t>(g.num_vertices()));
  const bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                          boost::boyer_myrvold_params::embedding = &emb[0]);
  if (!planar) return std::nullopt;
  std::vector<std::vector<EdgeId>> rotation(static_cast<std::size_t>(g.num_vertices()));
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (const EdgeDesc& ed : emb[v]) rotation[v].push_back(boost::get(boost::edge_index, bg, ed));
  }
  return rotation;
}

}  // namespace detail

inline bool is_planar(const Graph& g) {
  if (g.num_edges() == 0) return true;
  return detail::boost_rotation(g).has_value();
}

/// Planar embedding of a connected graph (outer face: the face of dart 0), or
/// nullopt when the graph is not planar. Multigraphs are supported by
/// embedding one representative per parallel class and inserting the
/// remaining copies next to it.
inline std::optional<Embedding> planar_embed(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("planar_embed requires a connected graph");
  Embedding emb;
  emb.rotation.resize(static_cast<std::size_t>(g.num_vertices()));
  if (g.num_edges() == 0) return emb;

  // Collapse parallel classes.
  Graph simple(g.num_vertices());
  std::vector<std::vector<EdgeId>> copies;
  std::map<std::pair<int, int>, int> key_to_rep;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto key = std::make_pair(std::min(g.edge(e).u, g.edge(e).v), std::max(g.edge(e).u, g.edge(e).v));
    auto it = key_to_rep.find(key);
    if (it == key_to_rep.end()) {
      key_to_rep.emplace(key, simple.add_edge(g.edge(e).u, g.edge(e).v));
      copies.push_back({e});
    } else {
      copies[it->second].push_back(e);
    }
  }
  auto rot = detail::boost_rotation(simple);
  if (!rot) return std::nullopt;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (EdgeId rep : (*rot)[v]) {
      const auto& c = copies[rep];
      // Parallel copies form a nest of digons; list them in opposite order at the two ends.
      if (simple.edge(rep).u == v) {
        emb.rotation[v].insert(emb.rotation[v].end(), c.begin(), c.end());
      } else {
        emb.rotation[v].insert(emb.rotation[v].end(), c.rbegin(), c.rend());
      }
    }
  }
  emb.outer.push_back(make_dart(0, false));
  return emb;
}

}  // namespace cplanar
