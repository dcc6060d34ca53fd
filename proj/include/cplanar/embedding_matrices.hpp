#pragma once

#include <cplanar/c1p.hpp>
#include <cplanar/labeling.hpp>
#include <cplanar/oracle.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cplanar {

/// A cluster restricted to one 2-connected graph, with the vertices that must
/// stay on the outer face of the induced embedding of G[C].
struct BlockCluster {
  VertexSet vertices;
  VertexSet exposed;
};

/// Node of the forest obtained by splitting a rooted SPQR-tree at its R-nodes.
struct ForestNode {
  NodeKind kind = NodeKind::Q;  // S, P or Q only
  int orig = -1;                // rooted node id; the R-node for a special P-node and its Q-children; -1 for split roots
  bool special = false;         // special P-node replacing an R-node, or one of its Q-children
  int slot = 0;                 // 1..3 for the Q-children of a special P-node
  int parent = -1;
  std::vector<int> children;
  int tree = -1;
  int lo = 0, hi = 0;  // corresponding columns c(x) = [lo, hi) among the non-external columns
  bool lowest = false; // lowest-P-child
};

struct SplitTree {
  int root = -1;        // forest node of the (possibly fresh) root Q-node
  int parent_r = -1;    // R-node whose child was split off (-1 for the tree of the original root)
  int child_orig = -1;  // that child (rho')
  std::vector<int> columns;  // forest node per non-external column, in initial left-to-right order
};

struct SplitForest {
  std::vector<ForestNode> nodes;
  std::vector<SplitTree> trees;
  std::vector<std::vector<Label>> labels;  // [cluster][forest node]

  bool is_p(int x) const { return nodes[x].kind == NodeKind::P; }
};

/// Splits rt at every R-node (labels must not make the root fail).
inline SplitForest split_at_r_nodes(const RootedSpqrTree& rt, const std::vector<LabelTable>& tables) {
  SplitForest sf;
  auto add = [&](NodeKind kind, int orig, int tree, int parent) {
    ForestNode n;
    n.kind = kind;
    n.orig = orig;
    n.tree = tree;
    n.parent = parent;
    sf.nodes.push_back(n);
    const int id = static_cast<int>(sf.nodes.size()) - 1;
    if (parent >= 0) sf.nodes[parent].children.push_back(id);
    return id;
  };
  std::function<void(int, int, int)> build = [&](int id, int tree, int parent) {
    const NodeKind kind = rt.kind(id);
    if (kind != NodeKind::R) {
      const int x = add(kind, id, tree, parent);
      for (int ch : rt.nodes[id].children) build(ch, tree, x);
      return;
    }
    const int p = add(NodeKind::P, id, tree, parent);
    sf.nodes[p].special = true;
    for (int slot = 1; slot <= 3; ++slot) {
      const int q = add(NodeKind::Q, id, tree, p);
      sf.nodes[q].special = true;
      sf.nodes[q].slot = slot;
    }
    for (int ch : rt.nodes[id].children) {
      if (rt.kind(ch) == NodeKind::Q) continue;
      SplitTree st;
      st.parent_r = id;
      st.child_orig = ch;
      sf.trees.push_back(st);
      const int t = static_cast<int>(sf.trees.size()) - 1;
      const int fresh = add(NodeKind::Q, -1, t, -1);
      sf.trees[t].root = fresh;
      build(ch, t, fresh);
    }
  };
  sf.trees.push_back({});
  const int r = add(NodeKind::Q, rt.root, 0, -1);
  sf.trees[0].root = r;
  build(rt.nodes[rt.root].children[0], 0, r);

  // Columns: lowest-P-children in initial left-to-right order.
  std::vector<char> has_p(sf.nodes.size(), 0);
  std::function<bool(int)> mark = [&](int x) {
    bool any = sf.nodes[x].kind == NodeKind::P;
    for (int ch : sf.nodes[x].children) any = mark(ch) || any;
    has_p[x] = any;
    return any;
  };
  std::function<void(int)> assign = [&](int x) {
    ForestNode& n = sf.nodes[x];
    auto& cols = sf.trees[n.tree].columns;
    n.lo = static_cast<int>(cols.size());
    if (n.parent >= 0 && sf.nodes[n.parent].kind == NodeKind::P && !has_p[x]) {
      n.lowest = true;
      cols.push_back(x);
    } else {
      for (int ch : std::vector<int>(n.children)) assign(ch);
    }
    sf.nodes[x].hi = static_cast<int>(sf.trees[sf.nodes[x].tree].columns.size());
  };
  for (const SplitTree& st : sf.trees) {
    mark(st.root);
    assign(st.root);
  }

  sf.labels.resize(tables.size());
  for (std::size_t k = 0; k < tables.size(); ++k) {
    const LabelTable& lt = tables[k];
    auto& out = sf.labels[k];
    out.resize(sf.nodes.size());
    for (int x = 0; x < static_cast<int>(sf.nodes.size()); ++x) {
      const ForestNode& n = sf.nodes[x];
      if (n.orig < 0) {
        const int child = sf.trees[n.tree].child_orig;
        out[x] = lt.external[child] ? Label::inside : Label::outside;
      } else if (!n.special || n.kind == NodeKind::P) {
        out[x] = lt.node[n.orig];
      } else {
        const Label rl = lt.node[n.orig];
        if (rl == Label::border) {
          const bool first_out = lt.r_info[n.orig] && lt.r_info[n.orig]->left_bad;
          if (n.slot == 2) {
            out[x] = Label::inside;
          } else {
            out[x] = (n.slot == 1) == first_out ? Label::outside : Label::inside;
          }
        } else if (rl == Label::double_border) {
          out[x] = n.slot == 2 ? Label::inside : Label::border;
        } else {
          out[x] = rl;
        }
      }
    }
  }
  return sf;
}

struct TreeMatrix {
  BinaryMatrix m;
  int offset = 0;       // index of the first non-external column
  int ext_left = -1;    // split-off trees only
  int ext_right = -1;   // the single external column of the root tree
};

struct MatrixSet {
  std::vector<TreeMatrix> matrices;  // one per split tree
  int cluster_rows = 0;              // rows created for (P-node, cluster) pairs
};

/// Per (S-node, cluster) half assignment produced by assign_sides.
using SideTable = std::vector<std::vector<std::optional<Side>>>;  // [cluster][rooted node]

/// Builds all matrices. Returns nullopt if an external column side cannot be
/// determined (which only happens for roots that are infeasible).
inline std::optional<MatrixSet> build_matrices(const RootedSpqrTree& rt, const SplitForest& sf,
                                               const std::vector<LabelTable>& tables,
                                               const std::vector<BlockCluster>& clusters, const SideTable& sides) {
  MatrixSet ms;
  const Graph& g = rt.graph();
  auto describe = [&](int x) {
    const ForestNode& n = sf.nodes[x];
    std::string s(1, kind_letter(n.kind));
    if (n.orig < 0) return std::string("root") + std::to_string(n.tree);
    s += std::to_string(n.orig);
    if (n.special && n.kind == NodeKind::Q) s += "." + std::to_string(n.slot);
    if (n.special && n.kind == NodeKind::P) s += "'";
    return s;
  };
  for (int t = 0; t < static_cast<int>(sf.trees.size()); ++t) {
    const SplitTree& st = sf.trees[t];
    TreeMatrix tm;
    const int inner = static_cast<int>(st.columns.size());
    if (t == 0) {
      tm.m = BinaryMatrix(inner + 1);
      tm.offset = 0;
      tm.ext_right = inner;
      tm.m.column_labels[inner] = "ext";
    } else {
      tm.m = BinaryMatrix(inner + 2);
      tm.offset = 1;
      tm.ext_left = 0;
      tm.ext_right = inner + 1;
      tm.m.column_labels[0] = "ext-left";
      tm.m.column_labels[inner + 1] = "ext-right";
    }
    for (int i = 0; i < inner; ++i) tm.m.column_labels[tm.offset + i] = describe(st.columns[i]);
    ms.matrices.push_back(std::move(tm));
  }
  auto set_range = [&](int t, int row, int lo, int hi) {
    auto& m = ms.matrices[t];
    for (int j = lo; j < hi; ++j) m.m.rows[row][m.offset + j] = 1;
  };
  // Initialization and guard rows.
  for (int x = 0; x < static_cast<int>(sf.nodes.size()); ++x) {
    const ForestNode& n = sf.nodes[x];
    if (n.children.empty() || n.parent < 0 || n.hi == n.lo) continue;
    const int row = ms.matrices[n.tree].m.add_row("init " + describe(x));
    set_range(n.tree, row, n.lo, n.hi);
  }
  for (int t = 0; t < static_cast<int>(sf.trees.size()); ++t) {
    TreeMatrix& tm = ms.matrices[t];
    if (sf.trees[t].columns.empty()) continue;
    if (t == 0) {
      const int row = tm.m.add_row("guard ext");
      for (int j = 0; j < tm.m.cols; ++j) tm.m.rows[row][j] = j != tm.ext_right;
    } else {
      for (int skip : {tm.ext_left, tm.ext_right}) {
        const int row = tm.m.add_row(skip == tm.ext_left ? "guard left" : "guard right");
        for (int j = 0; j < tm.m.cols; ++j) tm.m.rows[row][j] = j != skip;
      }
    }
  }

  for (std::size_t k = 0; k < clusters.size(); ++k) {
    const auto in_c = membership(g.num_vertices(), clusters[k].vertices);
    const auto& lab = sf.labels[k];
    const std::string cname = "C" + std::to_string(k);
    std::vector<std::vector<int>> rel(sf.nodes.size());
    std::function<void(int)> visit = [&](int x) {
      const ForestNode& n = sf.nodes[x];
      for (int ch : n.children) visit(ch);
      if (n.children.empty() || n.lowest) return;
      auto& m = ms.matrices[n.tree];
      std::vector<int>& r = rel[x];
      if (n.kind == NodeKind::P) {
        for (int ch : n.children) r.insert(r.end(), rel[ch].begin(), rel[ch].end());
        const std::size_t own_begin = r.size();
        if (lab[x] != Label::outside && lab[x] != Label::inappropriate) {
          std::vector<int> inside;
          for (int ch : n.children) {
            if (lab[ch] == Label::inside) inside.push_back(ch);
          }
          auto add_inside = [&](int row) {
            for (int ch : inside) set_range(n.tree, row, sf.nodes[ch].lo, sf.nodes[ch].hi);
          };
          if (!inside.empty()) {
            const int row = m.m.add_row("r0(" + describe(x) + "," + cname + ")");
            add_inside(row);
            r.push_back(row);
          }
          int which = 1;
          for (int ch : n.children) {
            if (lab[ch] != Label::border) continue;
            const int row = m.m.add_row("r" + std::to_string(which++) + "(" + describe(x) + "," + cname + ")");
            set_range(n.tree, row, sf.nodes[ch].lo, sf.nodes[ch].hi);
            add_inside(row);
            r.push_back(row);
          }
          ms.cluster_rows += static_cast<int>(r.size() - own_begin);
        }
        // Extend each child's rows to the columns used by the other rows of this node.
        std::vector<std::vector<char>> extend;
        for (int ch : n.children) {
          std::vector<char> cols(static_cast<std::size_t>(m.m.cols), 0);
          std::vector<int> mine = rel[ch];
          std::sort(mine.begin(), mine.end());
          for (int row : r) {
            if (std::binary_search(mine.begin(), mine.end(), row)) continue;
            for (int j = n.lo; j < n.hi; ++j) {
              if (j >= sf.nodes[ch].lo && j < sf.nodes[ch].hi) continue;
              if (m.m.rows[row][m.offset + j]) cols[m.offset + j] = 1;
            }
          }
          extend.push_back(std::move(cols));
        }
        for (std::size_t i = 0; i < n.children.size(); ++i) {
          for (int row : rel[n.children[i]]) {
            for (int j = 0; j < m.m.cols; ++j) {
              if (extend[i][j]) m.m.rows[row][j] = 1;
            }
          }
        }
      } else if (n.kind == NodeKind::S) {
        if (lab[x] == Label::outside) return;
        for (int ch : n.children) r.insert(r.end(), rel[ch].begin(), rel[ch].end());
        if (!tables[k].external[n.orig]) return;
        std::vector<int> pc;
        for (int ch : n.children) {
          if (sf.nodes[ch].kind == NodeKind::P) pc.push_back(ch);
        }
        bool upper = lab[x] == Label::inside, lower = upper;
        if (lab[x] == Label::border) {
          const auto& side = sides[k][n.orig];
          upper = side && *side == Side::upper;
          lower = side && *side == Side::lower;
        }
        for (std::size_t i = 0; i < pc.size(); ++i) {
          for (std::size_t j = i + 1; j < pc.size(); ++j) {
            if (upper) {
              for (int row : rel[pc[i]]) set_range(n.tree, row, sf.nodes[pc[j]].lo, sf.nodes[pc[j]].hi);
            }
            if (lower) {
              for (int row : rel[pc[j]]) set_range(n.tree, row, sf.nodes[pc[i]].lo, sf.nodes[pc[i]].hi);
            }
          }
        }
      }
    };
    for (int t = 0; t < static_cast<int>(sf.trees.size()); ++t) {
      const SplitTree& st = sf.trees[t];
      visit(st.root);
      const int child = sf.nodes[st.root].children[0];
      auto& tm = ms.matrices[t];
      int column = -1;
      if (t == 0) {
        const RootedNode& root = rt.nodes[rt.root];
        if (in_c[root.s] && in_c[root.t]) column = tm.ext_right;
      } else if (lab[child] == Label::border && tables[k].external[st.child_orig]) {
        const int nu = st.parent_r;
        const RootedNode& rn = rt.nodes[nu];
        const auto& info = tables[k].r_info[nu];
        if (!info) return std::nullopt;
        int se = -1;
        for (std::size_t i = 0; i < rn.children.size(); ++i) {
          if (rn.children[i] == st.child_orig) se = rn.child_edge[i];
        }
        const SkeletonEdge& sk = rt.node(nu).edges[se];
        if (info->enclosed[se] < 0) return std::nullopt;
        const bool forward = sk.u == rt.nodes[st.child_orig].s;
        const bool interior_left = (info->enclosed[se] == 0) == forward;
        column = interior_left ? tm.ext_left : tm.ext_right;
      }
      if (column >= 0) {
        for (int row : rel[child]) tm.m.rows[row][column] = 1;
      }
    }
  }
  return ms;
}

/// Why a rooted attempt failed.
enum class RootFailure { none, inappropriate, side_conflict, c1p };

struct RootAttempt {
  RootFailure failure = RootFailure::none;
  std::optional<Embedding> embedding;
  int cluster_rows = 0;
  int cluster_size = 0;  // total size of the clusters used
  std::vector<std::vector<int>> orders;  // solved (normalized) column orders per matrix
};

/// Solves the matrices and builds the embedding of the block (root edge on the outer face, to the right).
inline std::optional<Embedding> solve_and_embed(const RootedSpqrTree& rt, const SplitForest& sf, const MatrixSet& ms,
                                                TieBreak tie, std::vector<std::vector<int>>* orders_out = nullptr) {
  std::vector<std::vector<int>> orders;
  for (std::size_t t = 0; t < ms.matrices.size(); ++t) {
    const TreeMatrix& tm = ms.matrices[t];
    std::vector<int> order;
    if (sf.trees[t].columns.empty()) {
      for (int j = 0; j < tm.m.cols; ++j) order.push_back(j);
    } else {
      auto solved = c1p_order(tm.m, tie);
      if (!solved) return std::nullopt;
      order = std::move(*solved);
    }
    if (t == 0) {
      if (order.front() == tm.ext_right && order.size() > 1) std::reverse(order.begin(), order.end());
      if (order.back() != tm.ext_right) throw std::logic_error("external column not at an end");
    } else {
      if (order.front() != tm.ext_left) std::reverse(order.begin(), order.end());
      if (order.front() != tm.ext_left || order.back() != tm.ext_right)
        throw std::logic_error("external columns not at the ends");
    }
    orders.push_back(std::move(order));
  }

  TreeEmbeddingChoice choice = TreeEmbeddingChoice::identity(rt);
  std::vector<std::vector<int>> child_trees(rt.nodes.size());
  for (int t = 1; t < static_cast<int>(sf.trees.size()); ++t) child_trees[sf.trees[t].parent_r].push_back(t);
  std::vector<std::vector<int>> tree_nodes(sf.trees.size());
  for (int x = 0; x < static_cast<int>(sf.nodes.size()); ++x) tree_nodes[sf.nodes[x].tree].push_back(x);

  std::function<void(int, bool)> orient = [&](int t, bool reversed) {
    const TreeMatrix& tm = ms.matrices[t];
    std::vector<int> oriented = orders[t];
    if (reversed) std::reverse(oriented.begin(), oriented.end());
    std::vector<int> pos(static_cast<std::size_t>(tm.m.cols));
    for (int i = 0; i < static_cast<int>(oriented.size()); ++i) pos[oriented[i]] = i;
    auto first_pos = [&](int x) {
      int best = std::numeric_limits<int>::max();
      for (int j = sf.nodes[x].lo; j < sf.nodes[x].hi; ++j) best = std::min(best, pos[tm.offset + j]);
      return best;
    };
    for (int x : tree_nodes[t]) {
      const ForestNode& n = sf.nodes[x];
      if (n.kind != NodeKind::P) continue;
      if (n.special) {
        choice.r_flip[n.orig] = first_pos(n.children[0]) > first_pos(n.children[2]);
      } else {
        auto& po = choice.p_order[n.orig];
        po.clear();
        for (int i = 0; i < static_cast<int>(n.children.size()); ++i) po.push_back(i);
        std::stable_sort(po.begin(), po.end(),
                         [&](int a, int b) { return first_pos(n.children[a]) < first_pos(n.children[b]); });
      }
    }
    for (int x : tree_nodes[t]) {
      const ForestNode& n = sf.nodes[x];
      if (n.kind != NodeKind::P || !n.special) continue;
      for (int t2 : child_trees[n.orig]) orient(t2, choice.r_flip[n.orig] != 0);
    }
  };
  orient(0, false);
  if (orders_out) *orders_out = std::move(orders);
  return embed_tree(rt, choice, true);
}

/// One full attempt at a fixed root: label, assign sides, split, build, solve.
inline RootAttempt attempt_root(const RootedSpqrTree& rt, const std::vector<BlockCluster>& clusters,
                                TieBreak tie = TieBreak::least) {
  RootAttempt out;
  std::vector<LabelTable> tables;
  std::vector<VertexSet> sets;
  for (const BlockCluster& bc : clusters) {
    tables.push_back(label_tree(rt, bc.vertices, bc.exposed));
    sets.push_back(bc.vertices);
    out.cluster_size += static_cast<int>(bc.vertices.size());
    if (tables.back().root_fails(rt)) {
      out.failure = RootFailure::inappropriate;
      return out;
    }
  }
  SideTable sides(clusters.size(), std::vector<std::optional<Side>>(rt.nodes.size()));
  for (int id : rt.preorder) {
    if (rt.kind(id) != NodeKind::S) continue;
    auto critical = critical_clusters(tables, id);
    if (critical.empty()) continue;
    auto assigned = assign_sides(rt, id, critical, sets);
    if (!assigned) {
      out.failure = RootFailure::side_conflict;
      return out;
    }
    for (std::size_t i = 0; i < critical.size(); ++i) sides[critical[i]][id] = (*assigned)[i];
  }
  SplitForest sf = split_at_r_nodes(rt, tables);
  auto ms = build_matrices(rt, sf, tables, clusters, sides);
  if (!ms) {
    out.failure = RootFailure::inappropriate;
    return out;
  }
  out.cluster_rows = ms->cluster_rows;
  auto emb = solve_and_embed(rt, sf, *ms, tie, &out.orders);
  if (!emb) {
    out.failure = RootFailure::c1p;
    return out;
  }
  out.embedding = std::move(emb);
  return out;
}

/// Whether `emb` (outer dart included) is c-planar for every cluster with its exposure set.
inline bool block_embedding_ok(const Graph& g, const Embedding& emb, const std::vector<BlockCluster>& clusters) {
  if (!validate_embedding(g, emb).empty()) return false;
  for (const BlockCluster& bc : clusters) {
    if (!c_planar_with_exposure(g, emb.rotation, emb.outer.at(0), bc.vertices, bc.exposed)) return false;
  }
  return true;
}

struct BlockResult {
  std::optional<Embedding> embedding;
  EdgeId root_edge = -1;
  RootFailure failure = RootFailure::none;  // most informative failure over all roots tried
  int max_cluster_rows = 0;
  int cluster_size = 0;
};

/// Clusters with fewer than two vertices, and duplicates, impose nothing.
inline std::vector<BlockCluster> effective_clusters(std::vector<BlockCluster> clusters) {
  std::vector<BlockCluster> out;
  for (BlockCluster& bc : clusters) {
    bc.vertices = normalized(bc.vertices);
    bc.exposed = normalized(bc.exposed);
    if (bc.vertices.size() < 2) continue;
    bool dup = false;
    for (const BlockCluster& o : out) dup = dup || (o.vertices == bc.vertices && o.exposed == bc.exposed);
    if (!dup) out.push_back(std::move(bc));
  }
  return out;
}

/// Runs the rooted test on one 2-connected graph for any root edge, sharing
/// the SPQR-tree between attempts.
class BlockSolver {
 public:
  BlockSolver(const Graph& g, const std::vector<BlockCluster>& clusters)
      : g_(&g), clusters_(effective_clusters(clusters)), tree_(build_spqr(g)) {}

  const std::vector<BlockCluster>& clusters() const { return clusters_; }

  /// Attempt at the root edge e; a returned embedding has been checked against the definition.
  RootAttempt solve(EdgeId e, TieBreak tie = TieBreak::least) const {
    const RootedSpqrTree rt = root_at(tree_, tree_.q_node(e));
    RootAttempt a = attempt_root(rt, clusters_, tie);
    if (a.embedding && !block_embedding_ok(*g_, *a.embedding, clusters_))
      throw std::logic_error("block embedding violates a cluster constraint at root edge " + std::to_string(e));
    return a;
  }

 private:
  const Graph* g_;
  std::vector<BlockCluster> clusters_;
  SpqrTree tree_;
};

/// Tries the given root edges of a 2-connected graph in order and returns the first embedding found.
inline BlockResult test_block(const Graph& g, const std::vector<BlockCluster>& clusters,
                              const std::vector<EdgeId>& roots, TieBreak tie = TieBreak::least) {
  BlockResult out;
  const BlockSolver solver(g, clusters);
  for (const BlockCluster& bc : solver.clusters()) out.cluster_size += static_cast<int>(bc.vertices.size());
  for (EdgeId e : roots) {
    RootAttempt a = solver.solve(e, tie);
    out.max_cluster_rows = std::max(out.max_cluster_rows, a.cluster_rows);
    if (!a.embedding) {
      out.failure = std::max(out.failure, a.failure);
      continue;
    }
    out.embedding = std::move(a.embedding);
    out.root_edge = e;
    out.failure = RootFailure::none;
    return out;
  }
  return out;
}

}  // namespace cplanar
