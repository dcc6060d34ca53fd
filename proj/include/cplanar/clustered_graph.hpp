#pragma once

#include <cplanar/embedding.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cplanar {

struct Cluster {
  std::string name;
  VertexSet vertices;                     // sorted
  std::optional<std::string> partition;   // partition tag, used by the two-partition fast path
};

/// A graph together with named, possibly overlapping vertex subsets.
struct ClusteredGraph {
  Graph graph;
  std::vector<std::string> vertex_names;  // may be empty: names default to the numeric id
  std::vector<Cluster> clusters;

  std::size_t total_cluster_size() const {
    std::size_t total = 0;
    for (const Cluster& c : clusters) total += c.vertices.size();
    return total;
  }

  std::string name_of(VertexId v) const {
    return v < static_cast<VertexId>(vertex_names.size()) ? vertex_names[v] : std::to_string(v);
  }
};

/// Throws PreconditionError unless every cluster is a nonempty subset of V.
inline void validate_clusters(const ClusteredGraph& cg) {
  for (const Cluster& c : cg.clusters) {
    if (c.vertices.empty()) throw PreconditionError("cluster '" + c.name + "' is empty");
    if (!std::is_sorted(c.vertices.begin(), c.vertices.end()) ||
        std::adjacent_find(c.vertices.begin(), c.vertices.end()) != c.vertices.end())
      throw PreconditionError("cluster '" + c.name + "' is not a sorted vertex set");
    for (VertexId v : c.vertices) {
      if (!cg.graph.has_vertex(v)) throw PreconditionError("cluster '" + c.name + "' names an unknown vertex");
    }
  }
}

inline VertexSet complement(int n, const VertexSet& s) {
  VertexSet out;
  for (VertexId v = 0; v < n; ++v) {
    if (!contains(s, v)) out.push_back(v);
  }
  return out;
}

inline bool is_c_connected(const ClusteredGraph& cg) {
  for (const Cluster& c : cg.clusters) {
    if (!induces_connected(cg.graph, c.vertices)) return false;
  }
  return true;
}

/// Every cluster and every nonempty complement induce connected subgraphs.
inline bool is_c_co_connected(const ClusteredGraph& cg) {
  for (const Cluster& c : cg.clusters) {
    if (!induces_connected(cg.graph, c.vertices)) return false;
    if (!induces_connected(cg.graph, complement(cg.graph.num_vertices(), c.vertices))) return false;
  }
  return true;
}

/// Faces of the embedding of G[C] induced by an embedding of G, expressed as
/// groups of faces of G, with the group holding the outer face identified.
class InducedFaces {
 public:
  InducedFaces(const Graph& g, const FaceMap& fm, const std::vector<char>& in_cluster, DartId outer)
      : g_(&g), fm_(&fm) {
    group_ = group_faces(g, fm, [&](EdgeId e) { return in_cluster[g.edge(e).u] && in_cluster[g.edge(e).v]; });
    outer_group_ = group_[fm.face_of(outer)];
  }

  int group_of_face(int f) const { return group_[f]; }
  bool is_outer_face(int f) const { return group_[f] == outer_group_; }

  /// Whether some angle at v belongs to the outer face of the induced embedding.
  /// Vertices without edges are trivially on the outer face.
  bool touches_outer(VertexId v) const {
    if (g_->degree(v) == 0) return true;
    for (int f : fm_->faces_at(v)) {
      if (is_outer_face(f)) return true;
    }
    return false;
  }

  /// Whether all angles at v (v outside the cluster) lie in the outer face.
  bool lies_in_outer(VertexId v) const { return touches_outer(v); }

 private:
  const Graph* g_;
  const FaceMap* fm_;
  std::vector<int> group_;
  int outer_group_ = -1;
};

/// Outer dart of the component containing each vertex (-1 for edgeless components).
inline std::vector<DartId> outer_dart_per_vertex(const Graph& g, const Embedding& emb) {
  auto comp = component_labels(g, [](VertexId) { return true; }, [](EdgeId) { return true; });
  int ncomp = 0;
  for (int c : comp) ncomp = std::max(ncomp, c + 1);
  std::vector<DartId> per_comp(static_cast<std::size_t>(ncomp), -1);
  for (DartId d : emb.outer) per_comp[comp[dart_tail(g, d)]] = d;
  std::vector<DartId> out(static_cast<std::size_t>(g.num_vertices()));
  for (VertexId v = 0; v < g.num_vertices(); ++v) out[v] = per_comp[comp[v]];
  return out;
}

/// Describes the first violated condition, or nullopt when `emb` is a valid
/// planar embedding in which every vertex outside each cluster C lies in the
/// outer face of G[C]. Clusters must induce connected subgraphs.
inline std::optional<std::string> c_planarity_violation(const ClusteredGraph& cg, const Embedding& emb) {
  if (auto err = validate_embedding(cg.graph, emb); !err.empty()) return err;
  const Graph& g = cg.graph;
  FaceMap fm(g, emb.rotation);
  auto outer_of = outer_dart_per_vertex(g, emb);
  auto comp = component_labels(g, [](VertexId) { return true; }, [](EdgeId) { return true; });
  for (const Cluster& c : cg.clusters) {
    const DartId outer = outer_of[c.vertices.front()];
    if (outer < 0) continue;
    InducedFaces view(g, fm, membership(g.num_vertices(), c.vertices), outer);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (comp[v] != comp[c.vertices.front()] || contains(c.vertices, v)) continue;
      if (!view.lies_in_outer(v))
        return "vertex " + cg.name_of(v) + " is enclosed by a cycle of cluster '" + c.name + "'";
    }
  }
  return std::nullopt;
}

inline bool check_c_planar_embedding(const ClusteredGraph& cg, const Embedding& emb) {
  if (!is_c_connected(cg)) throw PreconditionError("check_c_planar_embedding requires a c-connected instance");
  return !c_planarity_violation(cg, emb).has_value();
}

}  // namespace cplanar
