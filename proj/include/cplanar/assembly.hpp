#pragma once

#include <cplanar/bc_tree.hpp>
#include <cplanar/embedding_matrices.hpp>
#include <cplanar/io.hpp>
#include <cplanar/planarity.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cplanar {

/// Raised when some cluster does not induce a connected subgraph.
class NotCConnected : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

inline const char* failure_reason(RootFailure f) {
  switch (f) {
    case RootFailure::none: return "";
    case RootFailure::inappropriate: return "inappropriate-at-all-roots";
    case RootFailure::side_conflict:
    case RootFailure::c1p: return "c1p-failure";
  }
  return "";
}

/// Clusters (indices) relevant for child block h of cut vertex v: v in C and V_h not inside C.
inline std::vector<int> relevant_clusters(const ClusteredGraph& cg, const RootedBcTree& rb, VertexId v, int h) {
  std::vector<int> out;
  const VertexSet& vh = rb.below[h];
  for (int k = 0; k < static_cast<int>(cg.clusters.size()); ++k) {
    const VertexSet& c = cg.clusters[k].vertices;
    if (contains(c, v) && !std::includes(c.begin(), c.end(), vh.begin(), vh.end())) out.push_back(k);
  }
  return out;
}

/// C_ext of block b for cluster k: child cut vertices of b with a child block for which k is relevant.
inline VertexSet exposed_vertices(const ClusteredGraph& cg, const RootedBcTree& rb, int b, int k) {
  VertexSet out;
  for (VertexId v : rb.child_cuts[b]) {
    for (int h : rb.child_blocks_at(b, v)) {
      auto rel = relevant_clusters(cg, rb, v, h);
      if (std::find(rel.begin(), rel.end(), k) != rel.end()) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

/// A block as a standalone graph; local edge i is block edge i.
struct BlockGraph {
  Graph graph;
  std::vector<VertexId> global;  // local -> global vertex
  std::vector<EdgeId> edges;     // local -> global edge
  VertexId local(VertexId v) const {
    return static_cast<VertexId>(std::lower_bound(global.begin(), global.end(), v) - global.begin());
  }
};

inline BlockGraph block_graph(const Graph& g, const Block& b) {
  BlockGraph out;
  out.global = b.vertices;
  out.edges = b.edges;
  out.graph = Graph(static_cast<int>(b.vertices.size()));
  for (EdgeId e : b.edges) out.graph.add_edge(out.local(g.edge(e).u), out.local(g.edge(e).v));
  return out;
}

/// Suitable root edges (local ids): all edges of the root block, else the edges at the parent cut vertex.
inline std::vector<EdgeId> suitable_roots(const BlockGraph& bg, VertexId parent_cut) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < bg.graph.num_edges(); ++e) {
    const Edge& ed = bg.graph.edge(e);
    if (parent_cut < 0 || bg.global[ed.u] == parent_cut || bg.global[ed.v] == parent_cut) out.push_back(e);
  }
  return out;
}

/// Faces at v not enclosed by any cycle of the given clusters (each restricted to g),
/// in increasing id order: the face lies in the outer face of every induced embedding.
inline std::vector<int> free_faces(const Graph& g, const Embedding& emb, VertexId v,
                                   const std::vector<VertexSet>& clusters) {
  FaceMap fm(g, emb.rotation);
  std::vector<InducedFaces> views;
  for (const VertexSet& c : clusters) views.emplace_back(g, fm, membership(g.num_vertices(), c), emb.outer.at(0));
  auto faces = fm.faces_at(v);
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<int> out;
  for (int f : faces) {
    bool ok = true;
    for (const auto& view : views) ok = ok && view.is_outer_face(f);
    if (ok) out.push_back(f);
  }
  return out;
}

inline bool free_face_exists(const Graph& g, const Embedding& emb, VertexId v, const std::vector<VertexSet>& clusters) {
  return !free_faces(g, emb, v, clusters).empty();
}

/// The shortcut test: faces at v whose boundary has a vertex outside every given cluster.
inline std::vector<int> boundary_free_faces(const Graph& g, const Embedding& emb, VertexId v,
                                            const std::vector<VertexSet>& clusters) {
  FaceMap fm(g, emb.rotation);
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(emb.rotation[v].size()); ++i) {
    const int f = fm.face_at_angle(v, i);
    bool ok = true;
    for (const VertexSet& c : clusters) {
      bool outside = false;
      for (DartId d : fm.boundary(f)) outside = outside || !contains(c, dart_tail(g, d));
      ok = ok && outside;
    }
    if (ok) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct AssemblyOptions {
  TieBreak tie = TieBreak::least;
  std::optional<int> root_block;  // index into bc_tree(graph).blocks
};

/// Root-block trial outcome for diagnostics.
struct RootBlockTrial {
  int block = -1;
  std::string failure;  // empty on success
};

/// One free-face evaluation: cut vertex `cut` of `block`, child block `child`.
struct FreeFaceRecord {
  int block = -1;
  VertexId parent_cut = -1;
  EdgeId root_edge = -1;  // global id of the block's root edge (-1 for bridges)
  VertexId cut = -1;
  int child = -1;
  bool free = false;
  bool boundary_free = false;  // shortcut test
};

struct AssemblyReport {
  Decision decision;
  std::vector<RootBlockTrial> trials;
  std::vector<FreeFaceRecord> free_faces;
  long row_checks = 0;           // solved (block, root) pairs
  long row_bound_violations = 0; // pairs with more than 3 * sum |C ∩ V(H)| cluster rows
  long shortcut_disagreements = 0;
};

namespace detail {

/// Block embedding (global edge ids) plus anchors for its child blocks.
struct PlacedBlock {
  std::vector<std::vector<EdgeId>> rotation;  // local vertex -> global edges
  DartId outer = -1;                           // global dart
  std::map<std::pair<VertexId, int>, EdgeId> anchor;  // (cut, child) -> global edge after which the child goes
  std::vector<EdgeId> at_parent;  // rotation at the parent cut vertex, starting after the outer angle
};

struct BlockOutcome {
  std::optional<PlacedBlock> placed;
  std::string failure;
};

inline int failure_rank(const std::string& reason) {
  if (reason == "free-face-failure") return 3;
  if (reason == "c1p-failure") return 2;
  if (reason == "inappropriate-at-all-roots") return 1;
  return 0;
}

class Assembler {
 public:
  Assembler(const ClusteredGraph& cg, const BcTree& bc, const AssemblyOptions& opt, AssemblyReport& report)
      : cg_(cg), bc_(bc), opt_(opt), report_(report) {}

  BlockOutcome solve_block(const RootedBcTree& rb, int b) {
    const auto key = std::make_pair(b, rb.parent_cut[b]);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    BlockOutcome out = compute(rb, b);
    cache_.emplace(key, out);
    return out;
  }

 private:
  BlockOutcome compute(const RootedBcTree& rb, int b) {
    const Graph& g = cg_.graph;
    const BlockGraph bg = block_graph(g, bc_.blocks[b]);
    const int nl = bg.graph.num_vertices();
    // Relevant clusters per (child cut, child block), restricted to the block.
    struct ChildSlot {
      VertexId cut;
      int child;
      std::vector<VertexSet> relevant;
    };
    std::vector<ChildSlot> slots;
    for (VertexId v : rb.child_cuts[b]) {
      for (int h : rb.child_blocks_at(b, v)) {
        ChildSlot s{v, h, {}};
        for (int k : relevant_clusters(cg_, rb, v, h)) s.relevant.push_back(restrict(bg, cg_.clusters[k].vertices));
        slots.push_back(std::move(s));
      }
    }
    auto attempt = [&](const Embedding& local, EdgeId root_edge) -> std::optional<PlacedBlock> {
      PlacedBlock pb;
      bool ok = true;
      FaceMap fm(bg.graph, local.rotation);
      for (const ChildSlot& s : slots) {
        const VertexId lv = bg.local(s.cut);
        auto faces = free_faces(bg.graph, local, lv, s.relevant);
        auto shortcut = boundary_free_faces(bg.graph, local, lv, s.relevant);
        report_.free_faces.push_back({b, rb.parent_cut[b], root_edge, s.cut, s.child, !faces.empty(), !shortcut.empty()});
        report_.shortcut_disagreements += faces.empty() != shortcut.empty();
        if (faces.empty()) {
          ok = false;
          continue;
        }
        for (int i = 0; i < static_cast<int>(local.rotation[lv].size()); ++i) {
          if (fm.face_at_angle(lv, i) == faces.front()) {
            pb.anchor[{s.cut, s.child}] = bg.edges[local.rotation[lv][i]];
            break;
          }
        }
      }
      if (!ok) return std::nullopt;
      pb.rotation.resize(static_cast<std::size_t>(nl));
      for (int x = 0; x < nl; ++x) {
        for (EdgeId e : local.rotation[x]) pb.rotation[x].push_back(bg.edges[e]);
      }
      const DartId d = local.outer.at(0);
      pb.outer = make_dart(bg.edges[dart_edge(d)], (d % 2) != 0);
      if (rb.parent_cut[b] >= 0) {
        const VertexId lv = bg.local(rb.parent_cut[b]);
        const auto& rot = local.rotation[lv];
        const int k = static_cast<int>(rot.size());
        int j = 0;
        while (fm.face_at_angle(lv, j) != fm.face_of(d)) ++j;
        for (int i = 1; i <= k; ++i) pb.at_parent.push_back(bg.edges[rot[(j + i) % k]]);
      }
      return pb;
    };

    BlockOutcome out;
    if (bg.graph.num_edges() == 1) {
      Embedding local;
      local.rotation = {{0}, {0}};
      local.outer = {make_dart(0, false)};
      auto placed = attempt(local, -1);
      if (placed) {
        out.placed = std::move(placed);
      } else {
        out.failure = "free-face-failure";
      }
      return out;
    }
    std::vector<BlockCluster> clusters;
    for (int k = 0; k < static_cast<int>(cg_.clusters.size()); ++k) {
      BlockCluster c;
      c.vertices = restrict(bg, cg_.clusters[k].vertices);
      for (VertexId v : exposed_vertices(cg_, rb, b, k)) c.exposed.push_back(bg.local(v));
      c.exposed = normalized(std::move(c.exposed));
      clusters.push_back(std::move(c));
    }
    const BlockSolver solver(bg.graph, clusters);
    int total = 0;
    for (const BlockCluster& c : solver.clusters()) total += static_cast<int>(c.vertices.size());
    RootFailure worst = RootFailure::none;
    bool free_failed = false;
    for (EdgeId e : suitable_roots(bg, rb.parent_cut[b])) {
      RootAttempt a = solver.solve(e, opt_.tie);
      if (!a.embedding) {
        worst = std::max(worst, a.failure);
        continue;
      }
      ++report_.row_checks;
      report_.row_bound_violations += a.cluster_rows > 3 * total;
      auto placed = attempt(*a.embedding, bg.edges[e]);
      if (placed) {
        out.placed = std::move(placed);
        return out;
      }
      free_failed = true;
    }
    out.failure = free_failed ? "free-face-failure" : failure_reason(worst == RootFailure::none ? RootFailure::inappropriate : worst);
    return out;
  }

  static VertexSet restrict(const BlockGraph& bg, const VertexSet& c) {
    VertexSet out;
    for (VertexId v : c) {
      if (std::binary_search(bg.global.begin(), bg.global.end(), v)) out.push_back(bg.local(v));
    }
    return out;
  }

  const ClusteredGraph& cg_;
  const BcTree& bc_;
  const AssemblyOptions& opt_;
  AssemblyReport& report_;
  std::map<std::pair<int, VertexId>, BlockOutcome> cache_;
};

/// Inserts every block's rotation into the global rotation system, parents
/// first; a child block goes into the angle after its anchor edge.
inline void combine(const BcTree& bc, const RootedBcTree& rb, const std::map<int, PlacedBlock>& placed,
                    std::vector<std::vector<EdgeId>>& rotation) {
  for (int b : rb.order) {
    const PlacedBlock& pb = placed.at(b);
    const Block& block = bc.blocks[b];
    for (std::size_t x = 0; x < block.vertices.size(); ++x) {
      const VertexId v = block.vertices[x];
      if (v != rb.parent_cut[b]) {
        rotation[v] = pb.rotation[x];
        continue;
      }
      const EdgeId anchor = placed.at(rb.parent_block[b]).anchor.at({v, b});
      auto& rot = rotation[v];
      auto pos = std::find(rot.begin(), rot.end(), anchor);
      rot.insert(pos + 1, pb.at_parent.begin(), pb.at_parent.end());
    }
  }
}

}  // namespace detail

/// Decides c-planarity of a c-connected clustered graph; a positive decision
/// carries an embedding that has passed the definitional checker.
inline AssemblyReport check_c_planarity_report(const ClusteredGraph& cg, const AssemblyOptions& opt = {}) {
  AssemblyReport report;
  const Graph& g = cg.graph;
  validate_clusters(cg);
  for (const Cluster& c : cg.clusters) {
    if (!induces_connected(g, c.vertices)) throw NotCConnected("cluster '" + c.name + "' does not induce a connected subgraph");
  }
  Decision& d = report.decision;
  if (!is_planar(g)) {
    d.reason = "nonplanar";
    return report;
  }
  const BcTree bc = bc_tree(g);
  detail::Assembler assembler(cg, bc, opt, report);
  Embedding emb;
  emb.rotation.resize(static_cast<std::size_t>(g.num_vertices()));
  for (const VertexSet& comp : connected_components(g)) {
    std::vector<int> blocks;
    for (int b = 0; b < static_cast<int>(bc.blocks.size()); ++b) {
      if (contains(comp, bc.blocks[b].vertices.front())) blocks.push_back(b);
    }
    if (blocks.empty()) continue;
    if (opt.root_block && std::find(blocks.begin(), blocks.end(), *opt.root_block) != blocks.end()) {
      blocks = {*opt.root_block};
    }
    bool done = false;
    std::string worst;
    for (int r : blocks) {
      const RootedBcTree rb = root_bc_tree(bc, r);
      std::map<int, detail::PlacedBlock> placed;
      std::string failure;
      for (int b : rb.order) {
        detail::BlockOutcome o = assembler.solve_block(rb, b);
        if (!o.placed) {
          failure = o.failure;
          break;
        }
        placed.emplace(b, std::move(*o.placed));
      }
      report.trials.push_back({r, failure});
      if (!failure.empty()) {
        if (detail::failure_rank(failure) > detail::failure_rank(worst)) worst = failure;
        continue;
      }
      detail::combine(bc, rb, placed, emb.rotation);
      emb.outer.push_back(placed.at(r).outer);
      done = true;
      break;
    }
    if (!done) {
      d.reason = worst;
      return report;
    }
  }
  if (auto err = c_planarity_violation(cg, emb))
    throw std::logic_error("assembled embedding is not c-planar: " + *err);
  d.verdict = Verdict::c_planar;
  d.embedding = std::move(emb);
  return report;
}

inline Decision check_c_planarity(const ClusteredGraph& cg, const AssemblyOptions& opt = {}) {
  return check_c_planarity_report(cg, opt).decision;
}

}  // namespace cplanar
