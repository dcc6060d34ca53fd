#pragma once

#include <cplanar/graph.hpp>

#include <map>
#include <string>
#include <vector>

namespace cplanar {

/// One side of an edge: dart 2e runs u->v, dart 2e+1 runs v->u (for edge e = {u,v}).
using DartId = int;

inline DartId make_dart(EdgeId e, bool reversed) { return 2 * e + (reversed ? 1 : 0); }
inline EdgeId dart_edge(DartId d) { return d / 2; }
inline DartId dart_twin(DartId d) { return d ^ 1; }
inline VertexId dart_tail(const Graph& g, DartId d) { return (d & 1) ? g.edge(d / 2).v : g.edge(d / 2).u; }
inline VertexId dart_head(const Graph& g, DartId d) { return (d & 1) ? g.edge(d / 2).u : g.edge(d / 2).v; }
/// Dart of `e` leaving `v`.
inline DartId dart_from(const Graph& g, EdgeId e, VertexId v) { return make_dart(e, g.edge(e).u != v); }
/// Dart of `e` entering `v`.
inline DartId dart_into(const Graph& g, EdgeId e, VertexId v) { return dart_twin(dart_from(g, e, v)); }

/// Rotation system (clockwise cyclic order of incident edges per vertex) plus
/// one dart per connected component (with edges) whose face is the outer face.
struct Embedding {
  std::vector<std::vector<EdgeId>> rotation;
  std::vector<DartId> outer;
};

struct Face {
  std::vector<DartId> boundary;         // cyclic sequence of darts
  std::vector<VertexId> incident_vertices;  // sorted
};

/// Face tracing for a rotation system. The face containing dart d continues
/// with the clockwise successor of d's edge at d's head, so the face of the
/// dart entering v along a is the one in the angle between a and its successor.
class FaceMap {
 public:
  FaceMap(const Graph& g, const std::vector<std::vector<EdgeId>>& rotation) : g_(&g), rotation_(&rotation) {
    const int n = g.num_vertices();
    position_.assign(static_cast<std::size_t>(2 * g.num_edges()), -1);
    for (VertexId v = 0; v < n; ++v) {
      const auto& rot = rotation[v];
      for (std::size_t i = 0; i < rot.size(); ++i) position_[dart_from(g, rot[i], v)] = static_cast<int>(i);
    }
    face_of_.assign(static_cast<std::size_t>(2 * g.num_edges()), -1);
    for (DartId start = 0; start < 2 * g.num_edges(); ++start) {
      if (face_of_[start] != -1) continue;
      const int id = static_cast<int>(faces_.size());
      faces_.emplace_back();
      DartId d = start;
      do {
        face_of_[d] = id;
        faces_.back().push_back(d);
        d = next(d);
      } while (d != start);
    }
  }

  /// Dart following d along its face.
  DartId next(DartId d) const {
    const VertexId v = dart_head(*g_, d);
    const auto& rot = (*rotation_)[v];
    const int pos = position_[dart_twin(d)];
    const EdgeId succ = rot[(static_cast<std::size_t>(pos) + 1) % rot.size()];
    return dart_from(*g_, succ, v);
  }

  int num_faces() const { return static_cast<int>(faces_.size()); }
  int face_of(DartId d) const { return face_of_[d]; }
  const std::vector<DartId>& boundary(int f) const { return faces_[f]; }
  /// Position of edge e in the rotation of v.
  int position(EdgeId e, VertexId v) const { return position_[dart_from(*g_, e, v)]; }
  /// Face in the angle at v between rotation[v][pos] and its clockwise successor.
  int face_at_angle(VertexId v, int pos) const { return face_of_[dart_into(*g_, (*rotation_)[v][pos], v)]; }

  std::vector<int> faces_at(VertexId v) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < (*rotation_)[v].size(); ++i) out.push_back(face_at_angle(v, static_cast<int>(i)));
    return out;
  }

 private:
  const Graph* g_;
  const std::vector<std::vector<EdgeId>>* rotation_;
  std::vector<int> position_;
  std::vector<int> face_of_;
  std::vector<std::vector<DartId>> faces_;
};

inline std::vector<Face> faces(const Graph& g, const Embedding& emb) {
  FaceMap fm(g, emb.rotation);
  std::vector<Face> out(static_cast<std::size_t>(fm.num_faces()));
  for (int f = 0; f < fm.num_faces(); ++f) {
    out[f].boundary = fm.boundary(f);
    for (DartId d : out[f].boundary) out[f].incident_vertices.push_back(dart_tail(g, d));
    out[f].incident_vertices = normalized(out[f].incident_vertices);
  }
  return out;
}

/// Empty string iff every rotation is a permutation of the vertex's incident edges.
inline std::string rotation_error(const Graph& g, const std::vector<std::vector<EdgeId>>& rotation) {
  if (static_cast<int>(rotation.size()) != g.num_vertices()) return "rotation size mismatch";
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto a = rotation[v];
    auto b = g.incident(v);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return "rotation of vertex " + std::to_string(v) + " is not a permutation of its edges";
  }
  return {};
}

/// Checks that every rotation is a permutation of the incident edges, that each
/// component satisfies n - m + f = 2, and that there is exactly one outer dart
/// per component with edges. Returns an empty string on success.
inline std::string validate_embedding(const Graph& g, const Embedding& emb) {
  if (auto err = rotation_error(g, emb.rotation); !err.empty()) return err;
  FaceMap fm(g, emb.rotation);
  auto comp = component_labels(g, [](VertexId) { return true; }, [](EdgeId) { return true; });
  int ncomp = 0;
  for (int c : comp) ncomp = std::max(ncomp, c + 1);
  std::vector<int> nv(ncomp, 0), ne(ncomp, 0), nf(ncomp, 0), nouter(ncomp, 0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) ++nv[comp[v]];
  for (const Edge& e : g.edges()) ++ne[comp[e.u]];
  for (int f = 0; f < fm.num_faces(); ++f) ++nf[comp[dart_tail(g, fm.boundary(f).front())]];
  for (DartId d : emb.outer) {
    if (d < 0 || d >= 2 * g.num_edges()) return "outer dart out of range";
    ++nouter[comp[dart_tail(g, d)]];
  }
  for (int c = 0; c < ncomp; ++c) {
    if (ne[c] == 0) {
      if (nouter[c] != 0) return "outer dart given for an edgeless component";
      continue;
    }
    if (nv[c] - ne[c] + nf[c] != 2) return "embedding is not planar (Euler characteristic violated)";
    if (nouter[c] != 1) return "each component needs exactly one outer dart";
  }
  return {};
}

/// Groups faces of an embedded graph into the faces of the subgraph formed by
/// the edges accepted by `keep_edge`: faces separated only by dropped edges
/// are merged. Returns a group representative per face.
template <class KeepEdge>
std::vector<int> group_faces(const Graph& g, const FaceMap& fm, KeepEdge keep_edge) {
  DisjointSets ds(static_cast<std::size_t>(fm.num_faces()));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!keep_edge(e)) ds.unite(fm.face_of(make_dart(e, false)), fm.face_of(make_dart(e, true)));
  }
  std::vector<int> group(static_cast<std::size_t>(fm.num_faces()));
  for (int f = 0; f < fm.num_faces(); ++f) group[f] = ds.find(f);
  return group;
}

/// Rotation system restricted to a subset of the edges.
template <class KeepEdge>
std::vector<std::vector<EdgeId>> restrict_rotation(const std::vector<std::vector<EdgeId>>& rotation,
                                                   KeepEdge keep_edge) {
  std::vector<std::vector<EdgeId>> out(rotation.size());
  for (std::size_t v = 0; v < rotation.size(); ++v) {
    for (EdgeId e : rotation[v]) {
      if (keep_edge(e)) out[v].push_back(e);
    }
  }
  return out;
}

/// Mirror image: every rotation reversed. Outer darts are re-anchored so that
/// each still names the same face set.
inline Embedding mirrored(const Graph& g, const Embedding& emb) {
  Embedding out = emb;
  for (auto& rot : out.rotation) std::reverse(rot.begin(), rot.end());
  // Reversing rotations turns the face of dart d into the face of its twin.
  for (DartId& d : out.outer) d = dart_twin(d);
  (void)g;
  return out;
}

}  // namespace cplanar
