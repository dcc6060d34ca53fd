#pragma once

#include <cplanar/spqr.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cplanar {

enum class Label { inside, outside, border, double_border, inappropriate };

inline const char* label_name(Label l) {
  switch (l) {
    case Label::inside: return "inside";
    case Label::outside: return "outside";
    case Label::border: return "border";
    case Label::double_border: return "double-border";
    case Label::inappropriate: return "inappropriate";
  }
  return "?";
}

/// Geometry of an R-node skeleton for one cluster, evaluated on the reference
/// embedding of skel(nu). Faces are grouped by non-outside edges and the root
/// edge; the two faces at the root edge give the left and right outer regions.
/// Every non-inside part needs one of its adjacent regions to be an outer one.
struct RNodeInfo {
  bool left_bad = false;   // some part can only be reached from the left region
  bool right_bad = false;
  /// Per skeleton edge: side (0 left of u->v, 1 right) lying inside the C-cycles
  /// through the edge, or -1 if not determined.
  std::vector<int> enclosed;
};

/// Labels of every node of a rooted SPQR-tree for one cluster C and exposure set C_ext.
struct LabelTable {
  std::vector<Label> node;       // indexed by node id; the root holds the root label
  std::vector<char> external;    // has an external C-path (label of the root edge of skel(nu))
  std::vector<std::optional<RNodeInfo>> r_info;
  /// Some non-root node is double-border and has an external C-path; then the
  /// C-cycle through it encloses one of its two sides.
  bool double_border_with_external = false;

  Label root_label(const RootedSpqrTree& rt) const { return node[rt.root]; }
  bool root_fails(const RootedSpqrTree& rt) const {
    return node[rt.root] == Label::inappropriate || double_border_with_external;
  }
};

namespace detail {

/// Whether G_r^-(nu) contains a path between the poles inside C.
inline bool has_inner_path(const RootedSpqrTree& rt, int nu, const std::vector<char>& in_c) {
  const Graph& g = rt.graph();
  const RootedNode& rn = rt.nodes[nu];
  if (!in_c[rn.s] || !in_c[rn.t]) return false;
  DisjointSets ds(g.num_vertices());
  for (EdgeId e : rn.real_edges) {
    if (in_c[g.edge(e).u] && in_c[g.edge(e).v]) ds.unite(g.edge(e).u, g.edge(e).v);
  }
  return ds.find(rn.s) == ds.find(rn.t);
}

/// Edges and inner vertices of the face walk of `start` between the poles
/// (the walk runs from one pole to the other, excluding the root edge).
inline void outer_path(const SkeletonView& view, const FaceMap& fm, DartId start, EdgeId root_edge,
                       std::vector<EdgeId>& edges, std::vector<int>& inner) {
  DartId d = fm.next(start);
  while (dart_edge(d) != root_edge) {
    edges.push_back(dart_edge(d));
    const int head = dart_head(view.graph, d);
    d = fm.next(d);
    if (dart_edge(d) != root_edge) inner.push_back(head);
  }
}

inline RNodeInfo r_node_info(const RootedSpqrTree& rt, int nu, const std::vector<Label>& edge_label,
                             const std::vector<char>& in_c, const std::vector<char>& in_ext, bool external,
                             bool& inappropriate) {
  const RootedNode& rn = rt.nodes[nu];
  const SkeletonView& view = *rn.skeleton;
  const Graph& sg = view.graph;
  const int root_edge = rn.root_edge;
  FaceMap fm(sg, view.rotation);
  auto group = group_faces(sg, fm, [&](EdgeId se) { return se == root_edge || edge_label[se] != Label::outside; });
  const DartId into_s = dart_into(sg, root_edge, view.local(rn.s));
  const int left = group[fm.face_of(into_s)];
  const int right = group[fm.face_of(dart_twin(into_s))];

  RNodeInfo info;
  info.enclosed.assign(static_cast<std::size_t>(sg.num_edges()), -1);
  inappropriate = false;
  // Records a part reachable from the given groups.
  auto need = [&](bool l, bool r) {
    if (!l && !r) inappropriate = true;
    if (l && !r) info.left_bad = true;
    if (r && !l) info.right_bad = true;
  };
  for (EdgeId se = 0; se < sg.num_edges(); ++se) {
    if (se == root_edge) continue;
    const int a = group[fm.face_of(make_dart(se, false))];
    const int b = group[fm.face_of(make_dart(se, true))];
    const Label l = edge_label[se];
    if (l == Label::double_border) {
      const bool ok = (a == left || a == right) && (b == left || b == right) && (left == right || a != b);
      if (!ok) inappropriate = true;
      if (left != right) info.left_bad = info.right_bad = true;
    } else if (l != Label::inside) {
      need(a == left || b == left, a == right || b == right);
    }
  }
  for (int x = 0; x < sg.num_vertices(); ++x) {
    const VertexId v = view.vertex[x];
    if (v == rn.s || v == rn.t || (in_c[v] && !in_ext[v])) continue;
    bool l = false, r = false;
    for (int f : fm.faces_at(x)) {
      l = l || group[f] == left;
      r = r || group[f] == right;
    }
    need(l, r);
  }
  // Outer regions of nu in the final embedding: only the bad one when a C-path
  // outside nu closes the cycle, otherwise both.
  const bool only_right = external && !info.left_bad;
  const bool only_left = external && info.left_bad && !info.right_bad;
  auto outer = [&](int g) {
    if (only_left) return g == left;
    if (only_right) return g == right;
    return g == left || g == right;
  };
  for (EdgeId se = 0; se < sg.num_edges(); ++se) {
    if (se == root_edge) continue;
    const bool a = outer(group[fm.face_of(make_dart(se, false))]);
    const bool b = outer(group[fm.face_of(make_dart(se, true))]);
    if (a != b) info.enclosed[se] = a ? 1 : 0;
  }
  return info;
}

}  // namespace detail

/// Bottom-up labeling of all nodes for cluster C (G[C] connected) with exposure set C_ext ⊆ C.
inline LabelTable label_tree(const RootedSpqrTree& rt, const VertexSet& c, const VertexSet& c_ext) {
  const Graph& g = rt.graph();
  if (!induces_connected(g, c)) throw PreconditionError("cluster must induce a connected subgraph");
  const auto in_c = membership(g.num_vertices(), c);
  const auto in_ext = membership(g.num_vertices(), c_ext);
  const int count = static_cast<int>(rt.nodes.size());
  LabelTable out;
  out.node.assign(static_cast<std::size_t>(count), Label::outside);
  out.external.assign(static_cast<std::size_t>(count), 0);
  out.r_info.resize(static_cast<std::size_t>(count));

  auto is_inside = [&](int id) {
    const RootedNode& rn = rt.nodes[id];
    for (VertexId v : rn.vertices) {
      if (!in_c[v] || (in_ext[v] && v != rn.s && v != rn.t)) return false;
    }
    return true;
  };

  for (auto it = rt.preorder.rbegin(); it != rt.preorder.rend(); ++it) {
    const int id = *it;
    if (id == rt.root) continue;
    const RootedNode& rn = rt.nodes[id];
    out.external[id] = has_external_path(rt, id, in_c);
    Label label;
    if (is_inside(id)) {
      label = Label::inside;
    } else if (rt.kind(id) == NodeKind::Q) {
      label = Label::outside;
    } else {
      int inside = 0, border = 0, dbl = 0;
      bool bad_child = false;
      for (int ch : rn.children) {
        switch (out.node[ch]) {
          case Label::inside: ++inside; break;
          case Label::border: ++border; break;
          case Label::double_border: ++dbl; break;
          case Label::inappropriate: bad_child = true; break;
          case Label::outside: break;
        }
      }
      if (bad_child) {
        label = Label::inappropriate;
      } else if (rt.kind(id) == NodeKind::P) {
        if (dbl == 0 && border <= 1) {
          label = Label::border;
        } else if ((dbl == 0 && border == 2) || (dbl == 1 && inside == 0 && border == 0)) {
          label = Label::double_border;
        } else {
          label = Label::inappropriate;
        }
      } else if (rt.kind(id) == NodeKind::S) {
        label = dbl > 0 ? Label::double_border : Label::border;
      } else {
        std::vector<Label> edge_label(rt.node(id).edges.size(), Label::outside);
        for (std::size_t i = 0; i < rn.children.size(); ++i) edge_label[rn.child_edge[i]] = out.node[rn.children[i]];
        bool inappropriate = false;
        RNodeInfo info = detail::r_node_info(rt, id, edge_label, in_c, in_ext, out.external[id], inappropriate);
        if (inappropriate) {
          label = Label::inappropriate;
        } else {
          label = info.left_bad && info.right_bad ? Label::double_border : Label::border;
        }
        out.r_info[id] = std::move(info);
      }
      if (label != Label::inappropriate && !detail::has_inner_path(rt, id, in_c)) label = Label::outside;
    }
    out.node[id] = label;
    if (label == Label::double_border && out.external[id]) out.double_border_with_external = true;
  }

  const RootedNode& root = rt.nodes[rt.root];
  const Label child = out.node[root.children[0]];
  if (!in_c[root.s] || !in_c[root.t]) {
    out.node[rt.root] = child;
  } else if (child == Label::inside) {
    out.node[rt.root] = Label::inside;
  } else if (child == Label::outside || child == Label::border) {
    out.node[rt.root] = Label::border;
  } else {
    out.node[rt.root] = Label::inappropriate;
  }
  return out;
}

/// Clusters (indices into `labels`) critical for the S-node nu: border with an external path.
inline std::vector<int> critical_clusters(const std::vector<LabelTable>& labels, int nu) {
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(labels.size()); ++k) {
    if (labels[k].node[nu] == Label::border && labels[k].external[nu]) out.push_back(k);
  }
  return out;
}

enum class Constraint { same, different };

/// Same iff one external path of nu lies in both clusters.
inline Constraint side_constraint(const RootedSpqrTree& rt, int nu, const VertexSet& c1, const VertexSet& c2) {
  VertexSet both;
  std::set_intersection(c1.begin(), c1.end(), c2.begin(), c2.end(), std::back_inserter(both));
  return has_external_path(rt, nu, both) ? Constraint::same : Constraint::different;
}

enum class Side { upper, lower };

/// Two-colors the critical clusters of nu under the side constraints, the
/// first critical cluster taking the upper half. Returns nullopt on conflict.
/// Result is indexed like `critical`.
inline std::optional<std::vector<Side>> assign_sides(const RootedSpqrTree& rt, int nu, const std::vector<int>& critical,
                                                     const std::vector<VertexSet>& clusters) {
  const int k = static_cast<int>(critical.size());
  std::vector<int> color(static_cast<std::size_t>(k), -1);
  std::vector<std::vector<Constraint>> rel(static_cast<std::size_t>(k), std::vector<Constraint>(static_cast<std::size_t>(k)));
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      rel[a][b] = rel[b][a] = side_constraint(rt, nu, clusters[critical[a]], clusters[critical[b]]);
    }
  }
  for (int start = 0; start < k; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < k; ++b) {
        if (b == a) continue;
        const int want = rel[a][b] == Constraint::same ? color[a] : 1 - color[a];
        if (color[b] == -1) {
          color[b] = want;
          stack.push_back(b);
        } else if (color[b] != want) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<Side> out;
  for (int c : color) out.push_back(c == 0 ? Side::upper : Side::lower);
  return out;
}

}  // namespace cplanar
