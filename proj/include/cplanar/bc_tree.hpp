#pragma once

#include <cplanar/graph.hpp>

#include <vector>

namespace cplanar {

struct Block {
  VertexSet vertices;
  std::vector<EdgeId> edges;  // in increasing id order

  bool is_bridge() const { return edges.size() == 1; }
};

/// Blocks (maximal 2-connected subgraphs and bridges) and cut vertices. The
/// block/cut-vertex incidence is recorded per vertex.
struct BcTree {
  std::vector<Block> blocks;
  VertexSet cut_vertices;
  std::vector<std::vector<int>> blocks_of_vertex;

  bool is_cut_vertex(VertexId v) const { return blocks_of_vertex[v].size() >= 2; }
};

inline BcTree bc_tree(const Graph& g) {
  const int n = g.num_vertices();
  BcTree bc;
  bc.blocks_of_vertex.resize(static_cast<std::size_t>(n));
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<EdgeId> edge_stack;
  struct Frame {
    VertexId v;
    EdgeId parent_edge;
    std::size_t next;
  };
  std::vector<Frame> frames;
  int time = 0;

  auto emit_block = [&](EdgeId until) {
    Block b;
    while (true) {
      EdgeId e = edge_stack.back();
      edge_stack.pop_back();
      b.edges.push_back(e);
      b.vertices.push_back(g.edge(e).u);
      b.vertices.push_back(g.edge(e).v);
      if (e == until) break;
    }
    std::sort(b.edges.begin(), b.edges.end());
    b.vertices = normalized(std::move(b.vertices));
    const int id = static_cast<int>(bc.blocks.size());
    for (VertexId v : b.vertices) bc.blocks_of_vertex[v].push_back(id);
    bc.blocks.push_back(std::move(b));
  };

  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = time++;
    frames.push_back({root, -1, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      const VertexId v = f.v;
      if (f.next < g.incident(v).size()) {
        const EdgeId e = g.incident(v)[f.next++];
        if (e == f.parent_edge) continue;
        const VertexId w = g.opposite(e, v);
        if (disc[w] == -1) {
          edge_stack.push_back(e);
          disc[w] = low[w] = time++;
          frames.push_back({w, e, 0});
        } else if (disc[w] < disc[v]) {
          edge_stack.push_back(e);
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        const EdgeId pe = f.parent_edge;
        frames.pop_back();
        if (frames.empty()) break;
        const VertexId p = frames.back().v;
        low[p] = std::min(low[p], low[v]);
        if (low[v] >= disc[p]) emit_block(pe);
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (bc.blocks_of_vertex[v].size() >= 2) bc.cut_vertices.push_back(v);
  }
  return bc;
}

/// BC-tree rooted at a block: parent cut vertex per block, child blocks per
/// (block, child cut vertex), and the vertex set V_i hanging below each block.
struct RootedBcTree {
  int root_block = -1;
  std::vector<VertexId> parent_cut;              // -1 for the root block
  std::vector<int> parent_block;                 // -1 for the root block
  std::vector<std::vector<VertexId>> child_cuts; // per block
  std::vector<std::vector<int>> child_blocks;    // per block: blocks whose parent cut lies in this block
  std::vector<VertexSet> below;                  // per block: vertices of its subtree minus parent cut
  std::vector<int> order;                        // blocks in BFS order from the root

  /// Child blocks attached at cut vertex v of block b.
  std::vector<int> child_blocks_at(int b, VertexId v) const {
    std::vector<int> out;
    for (int c : child_blocks[b]) {
      if (parent_cut[c] == v) out.push_back(c);
    }
    return out;
  }
};

/// Roots the BC-tree of the connected component containing `root_block`.
inline RootedBcTree root_bc_tree(const BcTree& bc, int root_block) {
  const std::size_t nb = bc.blocks.size();
  RootedBcTree rt;
  rt.root_block = root_block;
  rt.parent_cut.assign(nb, -1);
  rt.parent_block.assign(nb, -1);
  rt.child_cuts.assign(nb, {});
  rt.child_blocks.assign(nb, {});
  rt.below.assign(nb, {});
  std::vector<char> seen(nb, 0);
  std::vector<char> cut_seen(bc.blocks_of_vertex.size(), 0);
  rt.order.push_back(root_block);
  seen[root_block] = 1;
  for (std::size_t i = 0; i < rt.order.size(); ++i) {
    const int b = rt.order[i];
    for (VertexId v : bc.blocks[b].vertices) {
      if (!bc.is_cut_vertex(v) || v == rt.parent_cut[b] || cut_seen[v]) continue;
      cut_seen[v] = 1;
      rt.child_cuts[b].push_back(v);
      for (int c : bc.blocks_of_vertex[v]) {
        if (seen[c]) continue;
        seen[c] = 1;
        rt.parent_cut[c] = v;
        rt.parent_block[c] = b;
        rt.child_blocks[b].push_back(c);
        rt.order.push_back(c);
      }
    }
  }
  for (auto it = rt.order.rbegin(); it != rt.order.rend(); ++it) {
    const int b = *it;
    VertexSet s;
    for (VertexId v : bc.blocks[b].vertices) {
      if (v != rt.parent_cut[b]) s.push_back(v);
    }
    for (int c : rt.child_blocks[b]) s.insert(s.end(), rt.below[c].begin(), rt.below[c].end());
    rt.below[b] = normalized(std::move(s));
  }
  return rt;
}

}  // namespace cplanar
