#pragma once

#include <cplanar/io.hpp>

#include <string>
#include <utility>
#include <vector>

namespace fixtures {

using cplanar::ClusteredGraph;
using cplanar::ClusterSpec;
using Names = std::vector<std::string>;
using Edges = std::vector<std::pair<std::string, std::string>>;

inline ClusteredGraph make(const Names& v, const Edges& e, const std::vector<ClusterSpec>& c = {}) {
  return cplanar::make_clustered_graph(v, e, c);
}

inline ClusterSpec cluster(std::string name, Names members) { return {std::move(name), std::move(members), {}}; }

inline Edges octahedron_edges() {
  return {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1"}, {"5", "1"}, {"5", "2"},
          {"5", "3"}, {"5", "4"}, {"6", "1"}, {"6", "2"}, {"6", "3"}, {"6", "4"}};
}

inline ClusteredGraph octahedron(bool with_cluster = true) {
  std::vector<ClusterSpec> c;
  if (with_cluster) c.push_back(cluster("equator", {"1", "2", "3", "4"}));
  return make({"1", "2", "3", "4", "5", "6"}, octahedron_edges(), c);
}

inline ClusteredGraph wheel(bool with_cluster = true) {
  std::vector<ClusterSpec> c;
  if (with_cluster) c.push_back(cluster("rim", {"1", "2", "3", "4"}));
  return make({"h", "1", "2", "3", "4"},
              {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1"}, {"h", "1"}, {"h", "2"}, {"h", "3"}, {"h", "4"}}, c);
}

/// Triangles abc (left) and cde (right) sharing the cut vertex c.
inline ClusteredGraph bowtie(bool with_cluster = true) {
  std::vector<ClusterSpec> c;
  if (with_cluster) c.push_back(cluster("abc", {"a", "b", "c"}));
  return make({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"c", "d"}, {"d", "e"}, {"e", "c"}}, c);
}

inline ClusteredGraph triangle(std::vector<ClusterSpec> c = {}) {
  return make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}, c);
}

inline ClusteredGraph cycle(int n, std::vector<ClusterSpec> c = {}) {
  Names v;
  Edges e;
  for (int i = 1; i <= n; ++i) v.push_back(std::to_string(i));
  for (int i = 1; i <= n; ++i) e.emplace_back(std::to_string(i), std::to_string(i % n + 1));
  return make(v, e, c);
}

inline ClusteredGraph complete(int n, std::vector<ClusterSpec> c = {}) {
  Names v;
  Edges e;
  for (int i = 1; i <= n; ++i) v.push_back(std::to_string(i));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) e.emplace_back(std::to_string(i), std::to_string(j));
  }
  return make(v, e, c);
}

/// u and v joined by the paths u-v, u-a-v, u-b-v.
inline ClusteredGraph theta(std::vector<ClusterSpec> c = {}) {
  return make({"u", "v", "a", "b"}, {{"u", "v"}, {"u", "a"}, {"a", "v"}, {"u", "b"}, {"b", "v"}}, c);
}

inline cplanar::VertexId vid(const ClusteredGraph& cg, const std::string& name) {
  for (cplanar::VertexId v = 0; v < cg.graph.num_vertices(); ++v) {
    if (cg.vertex_names[v] == name) return v;
  }
  throw std::invalid_argument("no vertex " + name);
}

inline cplanar::EdgeId eid(const ClusteredGraph& cg, const std::string& a, const std::string& b) {
  return *cg.graph.find_edge(vid(cg, a), vid(cg, b));
}

}  // namespace fixtures
