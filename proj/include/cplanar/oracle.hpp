#pragma once

#include <cplanar/clustered_graph.hpp>
#include <cplanar/io.hpp>
#include <cplanar/spqr.hpp>

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cplanar {

/// Thrown when an exhaustive search would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr long kDefaultOracleBudget = 1'000'000;

/// Calls `visit(rotation)` once per planar rotation system of the connected
/// graph g (mirror images count separately). Embeddings are built by inserting
/// edges one at a time, each new edge either attaching a fresh vertex at some
/// angle or joining two angles of a common face. `visit` returns true to stop.
/// Throws BudgetExceeded after `budget` search nodes. Returns true if stopped.
template <class Visit>
bool for_each_embedding(const Graph& g, Visit&& visit, long budget = kDefaultOracleBudget) {
  if (!is_connected(g)) throw PreconditionError("embedding enumeration requires a connected graph");
  const int n = g.num_vertices();
  const int m = g.num_edges();
  if (m == 0) return visit(std::vector<std::vector<EdgeId>>(static_cast<std::size_t>(n)));
  // Edge order: every edge after the first touches a vertex already present.
  std::vector<EdgeId> order;
  {
    std::vector<char> placed(static_cast<std::size_t>(m), 0), present(static_cast<std::size_t>(n), 0);
    present[g.edge(0).u] = present[g.edge(0).v] = 1;
    order.push_back(0);
    placed[0] = 1;
    bool progress = true;
    while (progress) {
      progress = false;
      // Prefer tree edges (to fresh vertices) in id order, then chords.
      for (int pass = 0; pass < 2 && !progress; ++pass) {
        for (EdgeId e = 0; e < m; ++e) {
          if (placed[e]) continue;
          const bool pu = present[g.edge(e).u], pv = present[g.edge(e).v];
          if (!(pu || pv)) continue;
          if (pass == 0 && pu && pv) continue;
          placed[e] = 1;
          present[g.edge(e).u] = present[g.edge(e).v] = 1;
          order.push_back(e);
          progress = true;
          break;
        }
      }
    }
    assert(static_cast<int>(order.size()) == m);
  }
  std::vector<std::vector<EdgeId>> rot(static_cast<std::size_t>(n));  // positions in `order`
  long nodes = 0;
  std::function<bool(int)> extend = [&](int k) -> bool {
    if (++nodes > budget) throw BudgetExceeded("embedding enumeration budget exceeded");
    if (k == m) {
      std::vector<std::vector<EdgeId>> full(static_cast<std::size_t>(n));
      for (VertexId v = 0; v < n; ++v) {
        for (EdgeId pe : rot[v]) full[v].push_back(order[pe]);
      }
      return visit(full);
    }
    const VertexId u = g.edge(order[k]).u, v = g.edge(order[k]).v;
    auto insert_after = [&](VertexId x, int pos) {
      auto& r = rot[x];
      r.insert(r.begin() + (r.empty() ? 0 : pos + 1), k);
    };
    auto remove = [&](VertexId x) { rot[x].erase(std::find(rot[x].begin(), rot[x].end(), k)); };
    bool stop = false;
    if (rot[u].empty() || rot[v].empty()) {
      const VertexId anchor = rot[u].empty() ? v : u;
      const VertexId fresh = anchor == u ? v : u;
      const int choices = std::max<int>(1, static_cast<int>(rot[anchor].size()));
      for (int i = 0; i < choices && !stop; ++i) {
        insert_after(anchor, i);
        rot[fresh].push_back(k);
        stop = extend(k + 1);
        rot[fresh].clear();
        remove(anchor);
      }
      return stop;
    }
    Graph before(n);
    for (int x = 0; x < k; ++x) before.add_edge(g.edge(order[x]).u, g.edge(order[x]).v);
    FaceMap fm(before, rot);
    const auto fu = fm.faces_at(u);
    const auto fv = fm.faces_at(v);
    for (std::size_t i = 0; i < fu.size() && !stop; ++i) {
      for (std::size_t j = 0; j < fv.size() && !stop; ++j) {
        if (fu[i] != fv[j]) continue;
        insert_after(u, static_cast<int>(i));
        insert_after(v, static_cast<int>(j));
        stop = extend(k + 1);
        remove(u);
        remove(v);
      }
    }
    return stop;
  };
  return extend(0);
}

/// Faces f (ids of `fm`) such that choosing f as outer face makes the
/// embedding c-planar for all clusters; clusters must lie in this graph.
inline std::vector<int> c_planar_outer_faces(const Graph& g, const FaceMap& fm, const std::vector<VertexSet>& clusters) {
  std::vector<char> ok(static_cast<std::size_t>(fm.num_faces()), 1);
  for (const VertexSet& c : clusters) {
    auto in = membership(g.num_vertices(), c);
    auto group = group_faces(g, fm, [&](EdgeId e) { return in[g.edge(e).u] && in[g.edge(e).v]; });
    int required = -1;
    bool impossible = false;
    for (VertexId v = 0; v < g.num_vertices() && !impossible; ++v) {
      if (in[v] || g.degree(v) == 0) continue;
      const int gv = group[fm.face_at_angle(v, 0)];
      if (required == -1) {
        required = gv;
      } else if (required != gv) {
        impossible = true;
      }
    }
    for (int f = 0; f < fm.num_faces(); ++f) {
      if (impossible || (required != -1 && group[f] != required)) ok[f] = 0;
    }
  }
  std::vector<int> out;
  for (int f = 0; f < fm.num_faces(); ++f) {
    if (ok[f]) out.push_back(f);
  }
  return out;
}

struct OracleResult {
  bool c_planar = false;
  std::optional<Embedding> witness;
  long embeddings = 0;  // rotation systems visited
};

/// Exhaustive c-planarity test by definition, per connected component.
inline OracleResult oracle_c_planar(const ClusteredGraph& cg, long budget = kDefaultOracleBudget) {
  validate_clusters(cg);
  if (!is_c_connected(cg)) throw PreconditionError("oracle requires a c-connected instance");
  const Graph& g = cg.graph;
  OracleResult result;
  Embedding witness;
  witness.rotation.resize(static_cast<std::size_t>(g.num_vertices()));
  for (const VertexSet& comp : connected_components(g)) {
    std::vector<EdgeId> edge_map;
    std::vector<VertexId> index;
    Graph h = induced_subgraph(g, comp, &edge_map, &index);
    if (h.num_edges() == 0) continue;
    std::vector<VertexSet> local;
    for (const Cluster& c : cg.clusters) {
      if (!contains(comp, c.vertices.front())) continue;
      VertexSet s;
      for (VertexId v : c.vertices) s.push_back(index[v]);
      local.push_back(normalized(std::move(s)));
    }
    bool found = false;
    for_each_embedding(
        h,
        [&](const std::vector<std::vector<EdgeId>>& rot) {
          ++result.embeddings;
          FaceMap fm(h, rot);
          auto good = c_planar_outer_faces(h, fm, local);
          if (good.empty()) return false;
          found = true;
          for (std::size_t i = 0; i < comp.size(); ++i) {
            for (EdgeId e : rot[i]) witness.rotation[comp[i]].push_back(edge_map[e]);
          }
          const DartId d = fm.boundary(good.front()).front();
          const EdgeId ge = edge_map[dart_edge(d)];
          witness.outer.push_back(dart_from(g, ge, comp[dart_tail(h, d)]));
          return true;
        },
        budget);
    if (!found) return result;
  }
  result.c_planar = true;
  result.witness = std::move(witness);
  return result;
}

/// Whether the embedding (rotation + outer dart) of g is c-planar for {C} and
/// places every vertex of C_ext on the outer face of the induced embedding of G[C].
inline bool c_planar_with_exposure(const Graph& g, const std::vector<std::vector<EdgeId>>& rotation, DartId outer,
                                   const VertexSet& c, const VertexSet& c_ext) {
  FaceMap fm(g, rotation);
  InducedFaces view(g, fm, membership(g.num_vertices(), c), outer);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const bool must_touch = !contains(c, v) || contains(c_ext, v);
    if (must_touch && !view.touches_outer(v)) return false;
  }
  return true;
}

namespace detail {

/// All simple s-t paths (as edge lists) using only vertices accepted by
/// `allowed` and edges accepted by `edge_ok`.
template <class VertexOk, class EdgeOk>
std::vector<std::vector<EdgeId>> simple_paths(const Graph& g, VertexId s, VertexId t, VertexOk allowed, EdgeOk edge_ok) {
  std::vector<std::vector<EdgeId>> out;
  std::vector<char> on(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<EdgeId> path;
  if (!allowed(s) || !allowed(t)) return out;
  std::function<void(VertexId)> go = [&](VertexId x) {
    if (x == t) {
      out.push_back(path);
      return;
    }
    for (EdgeId e : g.incident(x)) {
      if (!edge_ok(e)) continue;
      const VertexId y = g.opposite(e, x);
      if (on[y] || !allowed(y)) continue;
      on[y] = 1;
      path.push_back(e);
      go(y);
      path.pop_back();
      on[y] = 0;
    }
  };
  on[s] = 1;
  go(s);
  return out;
}

}  // namespace detail

/// Evaluates the two conditions of the characterization for one embedding
/// of the 2-connected graph underlying `rt` (root edge on the outer face, with
/// `outer` a dart of the root edge whose face is the outer face):
///  1. all external C-paths of every non-inside node lie on the same side;
///  2. no cycle of non-outside skeleton edges encloses a non-inside skeleton
///     edge or a skeleton vertex of C_ext.
/// Node labels are evaluated from their definitions on the graph.
inline bool characterization_holds(const RootedSpqrTree& rt, const std::vector<std::vector<EdgeId>>& rotation, DartId outer,
                              const VertexSet& c, const VertexSet& c_ext) {
  const Graph& g = rt.graph();
  const int n = g.num_vertices();
  auto in_c = membership(n, c);
  FaceMap fm(g, rotation);
  const int outer_face = fm.face_of(outer);

  auto pertinent_mask = [&](int id) {
    std::vector<char> mask(static_cast<std::size_t>(g.num_edges()), 0);
    for (EdgeId e : rt.nodes[id].real_edges) mask[e] = 1;
    return mask;
  };
  auto is_inside = [&](int id) {
    const RootedNode& rn = rt.nodes[id];
    for (VertexId v : rn.vertices) {
      if (!in_c[v]) return false;
      if (contains(c_ext, v) && v != rn.s && v != rn.t) return false;
    }
    return true;
  };
  // A C-path between the poles inside G_r^-(id), if any.
  auto inner_c_path = [&](int id) -> std::optional<std::vector<EdgeId>> {
    const RootedNode& rn = rt.nodes[id];
    auto mask = pertinent_mask(id);
    auto paths = detail::simple_paths(
        g, rn.s, rn.t, [&](VertexId v) { return in_c[v] != 0; }, [&](EdgeId e) { return mask[e] != 0; });
    if (paths.empty()) return std::nullopt;
    return paths.front();
  };
  auto any_inner_path = [&](int id) {
    const RootedNode& rn = rt.nodes[id];
    auto mask = pertinent_mask(id);
    auto paths = detail::simple_paths(
        g, rn.s, rn.t, [](VertexId) { return true; }, [&](EdgeId e) { return mask[e] != 0; });
    assert(!paths.empty());
    return paths.front();
  };

  for (int id : rt.preorder) {
    if (id == rt.root || is_inside(id)) continue;
    const RootedNode& rn = rt.nodes[id];
    auto mask = pertinent_mask(id);
    // External C-paths of id.
    auto external = detail::simple_paths(
        g, rn.s, rn.t,
        [&](VertexId v) { return in_c[v] && !rt.is_internal_vertex(id, v); },
        [&](EdgeId e) { return mask[e] == 0; });

    // Condition 1: the side of each external path relative to G_r(id) is the
    // side of the contracted pertinent edge on which the outer face lies.
    if (external.size() > 1) {
      int side = -1;
      for (const auto& p : external) {
        // Faces grouped by the cycle p + (any pole path through G_r(id)).
        auto q = any_inner_path(id);
        std::vector<char> keep(static_cast<std::size_t>(g.num_edges()), 0);
        for (EdgeId e : p) keep[e] = 1;
        for (EdgeId e : q) keep[e] = 1;
        auto group = group_faces(g, fm, [&](EdgeId e) { return keep[e] != 0; });
        const DartId along = dart_from(g, q.front(), rn.s);
        const int left = group[fm.face_of(along)];
        const int mine = group[outer_face] == left ? 0 : 1;
        if (side == -1) {
          side = mine;
        } else if (side != mine) {
          return false;
        }
      }
    }

    // Condition 2 on the subdivision of skel(id) formed by one pole path per child.
    if (rt.kind(id) == NodeKind::Q) continue;
    std::vector<char> in_n(static_cast<std::size_t>(g.num_edges()), 0);
    struct ChildInfo {
      EdgeId sample;
      bool inside;
      bool in_n;
    };
    std::vector<ChildInfo> info;
    for (int ch : rn.children) {
      auto cp = inner_c_path(ch);
      const bool inside = is_inside(ch);
      if (cp) {
        for (EdgeId e : *cp) in_n[e] = 1;
        info.push_back({cp->front(), inside, true});
      } else {
        info.push_back({rt.nodes[ch].real_edges.front(), inside, false});
      }
    }
    if (!external.empty()) {
      for (EdgeId e : external.front()) in_n[e] = 1;
    }
    auto group = group_faces(g, fm, [&](EdgeId e) { return in_n[e] != 0; });
    const int outer_group = group[outer_face];
    for (const ChildInfo& ci : info) {
      if (ci.inside) continue;
      const int a = group[fm.face_of(make_dart(ci.sample, false))];
      const int b = group[fm.face_of(make_dart(ci.sample, true))];
      if (a != outer_group && b != outer_group) return false;
    }
    for (VertexId v : rt.node(id).vertices) {
      if (!contains(c_ext, v)) continue;
      bool touches = false;
      for (int f : fm.faces_at(v)) touches = touches || group[f] == outer_group;
      if (!touches) return false;
    }
  }
  return true;
}

/// Outcome of the two rooted exhaustive searches over embeddings of a
/// 2-connected graph with the root edge on the outer face.
struct RootedOracleResult {
  bool characterized = false; // some embedding satisfies the characterization's conditions
  bool definitional = false; // some embedding is c-planar for {C} with C_ext exposed
  long mismatches = 0;       // embeddings on which the two criteria disagree
};

inline RootedOracleResult oracle_rooted(const RootedSpqrTree& rt, const VertexSet& c, const VertexSet& c_ext,
                                        long budget = kDefaultOracleBudget) {
  const Graph& g = rt.graph();
  const EdgeId e = rt.root_real_edge();
  RootedOracleResult out;
  for_each_embedding(
      g,
      [&](const std::vector<std::vector<EdgeId>>& rot) {
        FaceMap fm(g, rot);
        for (DartId d : {make_dart(e, false), make_dart(e, true)}) {
          const bool ch = characterization_holds(rt, rot, d, c, c_ext);
          const bool def = c_planar_with_exposure(g, rot, d, c, c_ext);
          out.characterized = out.characterized || ch;
          out.definitional = out.definitional || def;
          out.mismatches += ch != def;
        }
        return false;
      },
      budget);
  return out;
}

/// True iff some embedding with the root edge on the outer face satisfies the
/// characterization's conditions.
inline bool oracle_lemma1(const RootedSpqrTree& rt, const VertexSet& c, const VertexSet& c_ext,
                          long budget = kDefaultOracleBudget) {
  return oracle_rooted(rt, c, c_ext, budget).characterized;
}

/// Whether some embedding of the 2-connected graph g with edge `root` on the
/// outer face is c-planar for every cluster and exposes each cluster's C_ext.
inline bool oracle_block(const Graph& g, EdgeId root, const std::vector<std::pair<VertexSet, VertexSet>>& clusters,
                         long budget = kDefaultOracleBudget) {
  return for_each_embedding(
      g,
      [&](const std::vector<std::vector<EdgeId>>& rot) {
        for (DartId d : {make_dart(root, false), make_dart(root, true)}) {
          bool ok = true;
          for (const auto& [c, ext] : clusters) ok = ok && c_planar_with_exposure(g, rot, d, c, ext);
          if (ok) return true;
        }
        return false;
      },
      budget);
}

}  // namespace cplanar
