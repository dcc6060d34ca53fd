#pragma once

#include <cplanar/bc_tree.hpp>
#include <cplanar/embedding.hpp>
#include <cplanar/planarity.hpp>

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace cplanar {

enum class NodeKind { S, P, Q, R };

inline char kind_letter(NodeKind k) {
  switch (k) {
    case NodeKind::S: return 'S';
    case NodeKind::P: return 'P';
    case NodeKind::Q: return 'Q';
    case NodeKind::R: return 'R';
  }
  return '?';
}

/// Skeleton edge: virtual (twin_node >= 0) or, only in Q-nodes, the real edge.
struct SkeletonEdge {
  VertexId u = -1;
  VertexId v = -1;
  int twin_node = -1;   // node on the other side of this virtual edge
  int twin_index = -1;  // index of the matching edge in that node's skeleton
  EdgeId real = -1;     // original edge (Q-nodes only)

  bool is_virtual() const { return twin_node >= 0; }
};

struct SpqrNode {
  NodeKind kind = NodeKind::Q;
  std::vector<SkeletonEdge> edges;
  VertexSet vertices;

  std::vector<int> neighbors() const {
    std::vector<int> out;
    for (const auto& e : edges) {
      if (e.is_virtual()) out.push_back(e.twin_node);
    }
    return out;
  }
};

/// SPQR-tree of a 2-connected multigraph. Node i < num_edges is the Q-node of edge i.
struct SpqrTree {
  Graph graph;
  std::vector<SpqrNode> nodes;

  int q_node(EdgeId e) const { return e; }
  int num_nodes() const { return static_cast<int>(nodes.size()); }
};

namespace detail {

struct CompEdge {
  VertexId u;
  VertexId v;
  int id;  // >= 0: real edge; < 0: virtual edge -(k + 1)
};

enum class CompType { open, bond, polygon, rigid };

inline std::pair<VertexId, VertexId> edge_key(const CompEdge& e) { return {std::min(e.u, e.v), std::max(e.u, e.v)}; }

inline bool is_cycle(const std::vector<CompEdge>& comp) {
  std::map<VertexId, int> deg;
  for (const auto& e : comp) {
    ++deg[e.u];
    ++deg[e.v];
  }
  for (const auto& [v, d] : deg) {
    if (d != 2) return false;
  }
  return deg.size() == comp.size();  // connected 2-regular multigraph with n = m
}

/// Finds a split of `comp` at a separation pair; returns the edge indices of one side.
inline std::optional<std::pair<std::pair<VertexId, VertexId>, std::vector<int>>> find_split(
    const std::vector<CompEdge>& comp) {
  VertexSet verts;
  for (const auto& e : comp) {
    verts.push_back(e.u);
    verts.push_back(e.v);
  }
  verts = normalized(std::move(verts));
  std::map<VertexId, std::vector<int>> inc;
  for (int i = 0; i < static_cast<int>(comp.size()); ++i) {
    inc[comp[i].u].push_back(i);
    inc[comp[i].v].push_back(i);
  }
  for (std::size_t ia = 0; ia < verts.size(); ++ia) {
    for (std::size_t ib = ia + 1; ib < verts.size(); ++ib) {
      const VertexId a = verts[ia], b = verts[ib];
      DisjointSets ds(comp.size());
      for (VertexId x : verts) {
        if (x == a || x == b) continue;
        const auto& es = inc[x];
        for (std::size_t k = 1; k < es.size(); ++k) ds.unite(es[0], es[k]);
      }
      std::map<int, std::vector<int>> classes;
      for (int i = 0; i < static_cast<int>(comp.size()); ++i) classes[ds.find(i)].push_back(i);
      if (classes.size() < 2) continue;
      const std::vector<int>* pick = nullptr;
      if (classes.size() >= 3) {
        for (const auto& [root, members] : classes) {
          if (members.size() >= 2) {
            pick = &members;
            break;
          }
        }
      } else {
        const auto& first = classes.begin()->second;
        const auto& second = std::next(classes.begin())->second;
        if (first.size() >= 2 && second.size() >= 2) pick = &first;
      }
      if (pick) return std::make_pair(std::make_pair(a, b), *pick);
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Builds the SPQR-tree by repeated splitting at separation pairs followed by
/// merging of adjacent bonds and adjacent polygons.
inline SpqrTree build_spqr(const Graph& g) {
  if (g.num_edges() < 3 || !is_connected(g)) throw PreconditionError("build_spqr requires a 2-connected graph");
  {
    auto bc = bc_tree(g);
    if (bc.blocks.size() != 1 || !bc.cut_vertices.empty())
      throw PreconditionError("build_spqr requires a 2-connected graph");
  }
  using detail::CompEdge;
  using detail::CompType;
  std::vector<std::vector<CompEdge>> comps;
  std::vector<CompType> type;
  int next_virtual = 0;
  auto new_virtual = [&]() { return -(++next_virtual); };

  {
    std::vector<CompEdge> all;
    for (EdgeId e = 0; e < g.num_edges(); ++e) all.push_back({g.edge(e).u, g.edge(e).v, e});
    comps.push_back(std::move(all));
    type.push_back(CompType::open);
  }
  std::vector<int> work{0};
  while (!work.empty()) {
    const int c = work.back();
    work.pop_back();
    // Split off bundles of parallel edges.
    std::map<std::pair<VertexId, VertexId>, std::vector<int>> bundles;
    for (int i = 0; i < static_cast<int>(comps[c].size()); ++i) bundles[detail::edge_key(comps[c][i])].push_back(i);
    if (bundles.size() == 1) {
      type[c] = CompType::bond;
      continue;
    }
    std::vector<char> removed(comps[c].size(), 0);
    std::vector<CompEdge> added;
    for (const auto& [key, members] : bundles) {
      if (members.size() < 2) continue;
      const int k = new_virtual();
      std::vector<CompEdge> bond;
      for (int i : members) {
        bond.push_back(comps[c][i]);
        removed[i] = 1;
      }
      bond.push_back({key.first, key.second, k});
      comps.push_back(std::move(bond));
      type.push_back(CompType::bond);
      added.push_back({key.first, key.second, k});
    }
    if (!added.empty()) {
      std::vector<CompEdge> rest;
      for (std::size_t i = 0; i < comps[c].size(); ++i) {
        if (!removed[i]) rest.push_back(comps[c][i]);
      }
      rest.insert(rest.end(), added.begin(), added.end());
      comps[c] = std::move(rest);
    }
    if (detail::is_cycle(comps[c])) {
      type[c] = CompType::polygon;
      continue;
    }
    auto split = detail::find_split(comps[c]);
    if (!split) {
      type[c] = CompType::rigid;
      continue;
    }
    const auto [pair, side] = *split;
    const int k = new_virtual();
    std::vector<char> in_side(comps[c].size(), 0);
    for (int i : side) in_side[i] = 1;
    std::vector<CompEdge> one, two;
    for (std::size_t i = 0; i < comps[c].size(); ++i) (in_side[i] ? one : two).push_back(comps[c][i]);
    one.push_back({pair.first, pair.second, k});
    two.push_back({pair.first, pair.second, k});
    comps[c] = std::move(one);
    comps.push_back(std::move(two));
    type.push_back(CompType::open);
    work.push_back(c);
    work.push_back(static_cast<int>(comps.size()) - 1);
  }

  // Merge adjacent bonds and adjacent polygons.
  std::vector<char> alive(comps.size(), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<int, std::vector<int>> holders;
    for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
      if (!alive[c]) continue;
      for (const auto& e : comps[c]) {
        if (e.id < 0) holders[e.id].push_back(c);
      }
    }
    for (const auto& [k, hs] : holders) {
      assert(hs.size() == 2);
      const int a = hs[0], b = hs[1];
      if (type[a] != type[b] || (type[a] != CompType::bond && type[a] != CompType::polygon)) continue;
      std::vector<CompEdge> merged;
      for (const auto& e : comps[a]) {
        if (e.id != k) merged.push_back(e);
      }
      for (const auto& e : comps[b]) {
        if (e.id != k) merged.push_back(e);
      }
      comps[a] = std::move(merged);
      alive[b] = 0;
      changed = true;
      break;
    }
  }

  SpqrTree tree;
  tree.graph = g;
  tree.nodes.resize(static_cast<std::size_t>(g.num_edges()));
  std::map<int, std::pair<int, int>> first_holder;  // virtual id -> (node, index)
  auto link = [&](int node, int index, int vid) {
    auto it = first_holder.find(vid);
    if (it == first_holder.end()) {
      first_holder.emplace(vid, std::make_pair(node, index));
      return;
    }
    auto [other, other_index] = it->second;
    tree.nodes[node].edges[index].twin_node = other;
    tree.nodes[node].edges[index].twin_index = other_index;
    tree.nodes[other].edges[other_index].twin_node = node;
    tree.nodes[other].edges[other_index].twin_index = index;
  };
  for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
    if (!alive[c]) continue;
    SpqrNode node;
    node.kind = type[c] == CompType::bond ? NodeKind::P : type[c] == CompType::polygon ? NodeKind::S : NodeKind::R;
    const int id = tree.num_nodes();
    tree.nodes.push_back(node);
    for (const auto& e : comps[c]) {
      const int index = static_cast<int>(tree.nodes[id].edges.size());
      tree.nodes[id].edges.push_back({e.u, e.v, -1, -1, -1});
      tree.nodes[id].vertices.push_back(e.u);
      tree.nodes[id].vertices.push_back(e.v);
      if (e.id < 0) {
        link(id, index, e.id);
      } else {
        SpqrNode& q = tree.nodes[e.id];
        q.kind = NodeKind::Q;
        q.edges = {{e.u, e.v, -1, -1, e.id}, {e.u, e.v, id, index, -1}};
        q.vertices = normalized({e.u, e.v});
        tree.nodes[id].edges[index].twin_node = e.id;
        tree.nodes[id].edges[index].twin_index = 1;
      }
    }
    tree.nodes[id].vertices = normalized(std::move(tree.nodes[id].vertices));
  }
  return tree;
}

/// Skeleton of a node as a standalone graph on local vertex indices; edge i of
/// `graph` is skeleton edge i.
struct SkeletonView {
  Graph graph;
  std::vector<VertexId> vertex;  // local -> original
  std::vector<std::vector<EdgeId>> rotation;  // reference embedding (clockwise), root edge included

  int local(VertexId v) const {
    auto it = std::lower_bound(vertex.begin(), vertex.end(), v);
    assert(it != vertex.end() && *it == v);
    return static_cast<int>(it - vertex.begin());
  }
};

inline SkeletonView skeleton_view(const SpqrNode& node) {
  SkeletonView view;
  view.vertex = node.vertices;
  view.graph = Graph(static_cast<int>(view.vertex.size()));
  for (const auto& e : node.edges) view.graph.add_edge(view.local(e.u), view.local(e.v));
  return view;
}

struct RootedNode {
  int parent = -1;
  int root_edge = -1;  // skeleton edge index of the root edge
  VertexId s = -1;
  VertexId t = -1;
  std::vector<int> children;    // S: in path order from s to t; otherwise by skeleton edge index
  std::vector<int> child_edge;  // skeleton edge index per child
  VertexSet vertices;           // vertices of G_r(nu)
  std::vector<EdgeId> real_edges;  // edges of G_r(nu) (sorted); for the root: all edges
  std::vector<VertexId> path;   // S-nodes: s = x_0, ..., x_k = t
  std::optional<SkeletonView> skeleton;  // R-nodes: reference embedding with the root edge on the outer face
};

/// SPQR-tree rooted at a Q-node, with poles, children and pertinent sets.
struct RootedSpqrTree {
  const SpqrTree* tree = nullptr;
  int root = -1;
  std::vector<RootedNode> nodes;
  std::vector<int> preorder;

  const SpqrNode& node(int id) const { return tree->nodes[id]; }
  NodeKind kind(int id) const { return tree->nodes[id].kind; }
  const Graph& graph() const { return tree->graph; }
  /// The edge of G represented by the root.
  EdgeId root_real_edge() const { return tree->nodes[root].edges[0].real; }
  bool is_leaf(int id) const { return id != root && kind(id) == NodeKind::Q; }
  bool has_vertex(int id, VertexId v) const { return contains(nodes[id].vertices, v); }
  bool is_internal_vertex(int id, VertexId v) const {
    return v != nodes[id].s && v != nodes[id].t && contains(nodes[id].vertices, v);
  }
};

inline RootedSpqrTree root_at(const SpqrTree& tree, int q) {
  if (q < 0 || q >= tree.num_nodes() || tree.nodes[q].kind != NodeKind::Q)
    throw PreconditionError("root_at requires a Q-node");
  const Graph& g = tree.graph;
  RootedSpqrTree rt;
  rt.tree = &tree;
  rt.root = q;
  rt.nodes.resize(tree.nodes.size());
  {
    RootedNode& r = rt.nodes[q];
    const EdgeId e = tree.nodes[q].edges[0].real;
    r.s = g.edge(e).u;
    r.t = g.edge(e).v;
    r.root_edge = 0;
    r.children = {tree.nodes[q].edges[1].twin_node};
    r.child_edge = {1};
    RootedNode& c = rt.nodes[r.children[0]];
    c.parent = q;
    c.root_edge = tree.nodes[q].edges[1].twin_index;
    c.s = r.s;
    c.t = r.t;
  }
  rt.preorder.push_back(q);
  for (std::size_t i = 0; i < rt.preorder.size(); ++i) {
    const int id = rt.preorder[i];
    const SpqrNode& sk = tree.nodes[id];
    RootedNode& rn = rt.nodes[id];
    if (id != q) {
      auto add_child = [&](int index, VertexId cs, VertexId ct) {
        const int child = sk.edges[index].twin_node;
        rn.children.push_back(child);
        rn.child_edge.push_back(index);
        RootedNode& c = rt.nodes[child];
        c.parent = id;
        c.root_edge = sk.edges[index].twin_index;
        c.s = cs;
        c.t = ct;
      };
      switch (sk.kind) {
        case NodeKind::Q: break;
        case NodeKind::P:
          for (int k = 0; k < static_cast<int>(sk.edges.size()); ++k) {
            if (k != rn.root_edge) add_child(k, rn.s, rn.t);
          }
          break;
        case NodeKind::R:
          for (int k = 0; k < static_cast<int>(sk.edges.size()); ++k) {
            if (k != rn.root_edge) add_child(k, sk.edges[k].u, sk.edges[k].v);
          }
          break;
        case NodeKind::S: {
          std::vector<char> used(sk.edges.size(), 0);
          used[rn.root_edge] = 1;
          VertexId cur = rn.s;
          rn.path.push_back(cur);
          while (cur != rn.t) {
            int next = -1;
            for (int k = 0; k < static_cast<int>(sk.edges.size()); ++k) {
              if (!used[k] && (sk.edges[k].u == cur || sk.edges[k].v == cur)) {
                next = k;
                break;
              }
            }
            assert(next >= 0);
            used[next] = 1;
            const VertexId other = sk.edges[next].u == cur ? sk.edges[next].v : sk.edges[next].u;
            add_child(next, cur, other);
            cur = other;
            rn.path.push_back(cur);
          }
          break;
        }
      }
      if (sk.kind == NodeKind::R) {
        SkeletonView view = skeleton_view(sk);
        auto emb = planar_embed(view.graph);
        assert(emb.has_value());
        view.rotation = std::move(emb->rotation);
        // Fix the reflection: at s, the clockwise order after the root edge
        // starts with the edge to the lower-id neighbor of the two extremes.
        const int ls = view.local(rn.s);
        const auto& rot = view.rotation[ls];
        const auto pos = std::find(rot.begin(), rot.end(), rn.root_edge) - rot.begin();
        const EdgeId first = rot[(pos + 1) % rot.size()];
        const EdgeId last = rot[(pos + rot.size() - 1) % rot.size()];
        auto far_end = [&](EdgeId se) { return sk.edges[se].u == rn.s ? sk.edges[se].v : sk.edges[se].u; };
        if (far_end(last) < far_end(first)) {
          for (auto& r : view.rotation) std::reverse(r.begin(), r.end());
        }
        rn.skeleton = std::move(view);
      }
    }
    for (int c : rn.children) rt.preorder.push_back(c);
  }
  for (auto it = rt.preorder.rbegin(); it != rt.preorder.rend(); ++it) {
    const int id = *it;
    RootedNode& rn = rt.nodes[id];
    if (tree.nodes[id].kind == NodeKind::Q) {
      const EdgeId e = tree.nodes[id].edges[0].real;
      rn.real_edges = {e};
      rn.vertices = normalized({g.edge(e).u, g.edge(e).v});
      if (id != q) continue;
    }
    for (int c : rn.children) {
      rn.real_edges.insert(rn.real_edges.end(), rt.nodes[c].real_edges.begin(), rt.nodes[c].real_edges.end());
      rn.vertices.insert(rn.vertices.end(), rt.nodes[c].vertices.begin(), rt.nodes[c].vertices.end());
    }
    std::sort(rn.real_edges.begin(), rn.real_edges.end());
    rn.real_edges.erase(std::unique(rn.real_edges.begin(), rn.real_edges.end()), rn.real_edges.end());
    rn.vertices = normalized(std::move(rn.vertices));
  }
  return rt;
}

/// G_r(nu) (with a copy of the root edge appended when `with_root_edge`) or
/// G_r^-(nu), on the vertex ids of the original graph. `edge_map` receives the
/// original edge per new edge (-1 for the root edge copy).
inline Graph pertinent_graph(const RootedSpqrTree& rt, int nu, bool with_root_edge,
                             std::vector<EdgeId>* edge_map = nullptr) {
  if (nu == rt.root) throw PreconditionError("pertinent_graph is defined for non-root nodes");
  const Graph& g = rt.graph();
  Graph h(g.num_vertices());
  if (edge_map) edge_map->clear();
  for (EdgeId e : rt.nodes[nu].real_edges) {
    h.add_edge(g.edge(e).u, g.edge(e).v);
    if (edge_map) edge_map->push_back(e);
  }
  if (with_root_edge) {
    h.add_edge(rt.nodes[nu].s, rt.nodes[nu].t);
    if (edge_map) edge_map->push_back(-1);
  }
  return h;
}

/// Whether G has a path between the poles of nu that avoids all other
/// vertices and all edges of G_r(nu) and uses only vertices accepted by `in_set`.
inline bool has_external_path(const RootedSpqrTree& rt, int nu, const std::vector<char>& in_set) {
  if (nu == rt.root) throw PreconditionError("has_external_path is defined for non-root nodes");
  const Graph& g = rt.graph();
  const RootedNode& rn = rt.nodes[nu];
  if (!in_set[rn.s] || !in_set[rn.t]) return false;
  std::vector<char> blocked_edge(static_cast<std::size_t>(g.num_edges()), 0);
  for (EdgeId e : rn.real_edges) blocked_edge[e] = 1;
  std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<VertexId> stack{rn.s};
  seen[rn.s] = 1;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    if (x == rn.t) return true;
    for (EdgeId e : g.incident(x)) {
      if (blocked_edge[e]) continue;
      const VertexId y = g.opposite(e, x);
      if (seen[y] || !in_set[y]) continue;
      if (y != rn.t && rt.is_internal_vertex(nu, y)) continue;
      seen[y] = 1;
      stack.push_back(y);
    }
  }
  return false;
}

inline bool has_external_path(const RootedSpqrTree& rt, int nu, const VertexSet& s) {
  return has_external_path(rt, nu, membership(rt.graph().num_vertices(), s));
}

/// Embedding degrees of freedom of a rooted SPQR-tree: left-to-right order of
/// the children of every P-node (as indices into `children`) and the flip of
/// every R-node relative to its reference embedding.
struct TreeEmbeddingChoice {
  std::vector<std::vector<int>> p_order;
  std::vector<char> r_flip;

  static TreeEmbeddingChoice identity(const RootedSpqrTree& rt) {
    TreeEmbeddingChoice c;
    c.p_order.resize(rt.nodes.size());
    c.r_flip.assign(rt.nodes.size(), 0);
    for (int id = 0; id < static_cast<int>(rt.nodes.size()); ++id) {
      if (rt.kind(id) != NodeKind::P) continue;
      for (int i = 0; i < static_cast<int>(rt.nodes[id].children.size()); ++i) c.p_order[id].push_back(i);
    }
    return c;
  }
};

namespace detail {

struct Strip {
  std::vector<EdgeId> at_s;  // edges at s, left to right (clockwise)
  std::vector<EdgeId> at_t;  // edges at t, left to right (counter-clockwise)
};

inline void append_clockwise(std::vector<EdgeId>& out, const Strip& st, bool at_bottom) {
  if (at_bottom) {
    out.insert(out.end(), st.at_s.begin(), st.at_s.end());
  } else {
    out.insert(out.end(), st.at_t.rbegin(), st.at_t.rend());
  }
}

inline Strip build_strip(const RootedSpqrTree& rt, int id, const TreeEmbeddingChoice& choice,
                         std::vector<std::vector<EdgeId>>& rotation) {
  const RootedNode& rn = rt.nodes[id];
  const SpqrNode& sk = rt.node(id);
  Strip out;
  switch (sk.kind) {
    case NodeKind::Q: {
      const EdgeId e = sk.edges[0].real;
      out.at_s = {e};
      out.at_t = {e};
      break;
    }
    case NodeKind::P: {
      for (int i : choice.p_order[id]) {
        Strip c = build_strip(rt, rn.children[i], choice, rotation);
        out.at_s.insert(out.at_s.end(), c.at_s.begin(), c.at_s.end());
        out.at_t.insert(out.at_t.end(), c.at_t.begin(), c.at_t.end());
      }
      break;
    }
    case NodeKind::S: {
      std::vector<Strip> parts;
      for (int c : rn.children) parts.push_back(build_strip(rt, c, choice, rotation));
      out.at_s = parts.front().at_s;
      out.at_t = parts.back().at_t;
      for (std::size_t i = 1; i < rn.path.size() - 1; ++i) {
        auto& rot = rotation[rn.path[i]];
        append_clockwise(rot, parts[i], true);
        append_clockwise(rot, parts[i - 1], false);
      }
      break;
    }
    case NodeKind::R: {
      const SkeletonView& view = *rn.skeleton;
      std::vector<Strip> parts(sk.edges.size());
      for (std::size_t i = 0; i < rn.children.size(); ++i)
        parts[rn.child_edge[i]] = build_strip(rt, rn.children[i], choice, rotation);
      const bool flip = choice.r_flip[id] != 0;
      auto clockwise = [&](int local) {
        auto rot = view.rotation[local];
        if (flip) std::reverse(rot.begin(), rot.end());
        return rot;
      };
      auto contribution = [&](std::vector<EdgeId>& dst, EdgeId se, VertexId x) {
        const VertexId bottom = rt.nodes[sk.edges[se].twin_node].s;
        append_clockwise(dst, parts[se], bottom == x);
      };
      for (int local = 0; local < view.graph.num_vertices(); ++local) {
        const VertexId x = view.vertex[local];
        if (x == rn.s || x == rn.t) continue;
        for (EdgeId se : clockwise(local)) contribution(rotation[x], se, x);
      }
      auto after_root = [&](VertexId x) {
        auto rot = clockwise(view.local(x));
        auto pos = std::find(rot.begin(), rot.end(), rn.root_edge) - rot.begin();
        std::rotate(rot.begin(), rot.begin() + pos + 1, rot.end());
        rot.pop_back();
        return rot;
      };
      for (EdgeId se : after_root(rn.s)) contribution(out.at_s, se, rn.s);
      std::vector<EdgeId> cw_t;
      for (EdgeId se : after_root(rn.t)) contribution(cw_t, se, rn.t);
      out.at_t.assign(cw_t.rbegin(), cw_t.rend());
      break;
    }
  }
  return out;
}

}  // namespace detail

/// Embedding of the whole graph realizing `choice`, with the root edge on the
/// outer face. With `root_edge_right` the root edge is placed to the right of
/// G^-(r), so the outer face is bounded by the root edge and the left outer path.
inline Embedding embed_tree(const RootedSpqrTree& rt, const TreeEmbeddingChoice& choice, bool root_edge_right = true) {
  const Graph& g = rt.graph();
  Embedding emb;
  emb.rotation.resize(static_cast<std::size_t>(g.num_vertices()));
  const RootedNode& root = rt.nodes[rt.root];
  detail::Strip body = detail::build_strip(rt, root.children[0], choice, emb.rotation);
  const EdgeId e = rt.root_real_edge();
  auto& rs = emb.rotation[root.s];
  rs = body.at_s;
  rs.push_back(e);
  auto& rtt = emb.rotation[root.t];
  rtt = {e};
  rtt.insert(rtt.end(), body.at_t.rbegin(), body.at_t.rend());
  emb.outer = {root_edge_right ? dart_into(g, e, root.s) : dart_into(g, body.at_s.back(), root.s)};
  return emb;
}

}  // namespace cplanar
