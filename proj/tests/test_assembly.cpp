#include "fixtures.hpp"

#include <cplanar/assembly.hpp>
#include <cplanar/generator.hpp>
#include <cplanar/oracle.hpp>

#include <gtest/gtest.h>

using namespace cplanar;
using namespace fixtures;

namespace {

int block_with(const ClusteredGraph& cg, const BcTree& bc, const Names& names) {
  VertexSet s;
  for (const auto& n : names) s.push_back(vid(cg, n));
  s = normalized(s);
  for (int b = 0; b < static_cast<int>(bc.blocks.size()); ++b) {
    if (bc.blocks[b].vertices == s) return b;
  }
  return -1;
}

/// Three triangles abc, cxw, xyz in a chain, each its own cluster.
ClusteredGraph triangle_chain() {
  return make({"a", "b", "c", "x", "w", "y", "z"},
              {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"c", "x"}, {"x", "w"}, {"w", "c"}, {"x", "y"}, {"y", "z"}, {"z", "x"}},
              {cluster("L", {"a", "b", "c"}), cluster("M", {"c", "x", "w"}), cluster("R", {"x", "y", "z"})});
}

ClusteredGraph generated(std::uint64_t seed, int max_clusters = 3) {
  GeneratorOptions opt;
  opt.vertices = 4 + static_cast<int>(seed % 5);
  opt.clusters = 1 + static_cast<int>(seed % max_clusters);
  opt.seed = seed;
  return generate_instance(opt);
}

}  // namespace

TEST(Assembly, NamedFixtures) {
  auto oct = check_c_planarity(octahedron());
  EXPECT_FALSE(oct.c_planar());
  EXPECT_EQ(oct.reason, "inappropriate-at-all-roots");
  for (const auto& cg : {wheel(), bowtie(), theta(), triangle_chain()}) {
    auto d = check_c_planarity(cg);
    ASSERT_TRUE(d.c_planar());
    EXPECT_TRUE(check_c_planar_embedding(cg, *d.embedding));
  }
}

TEST(Assembly, BowtieRootBlocks) {
  auto bt = bowtie();
  auto bc = bc_tree(bt.graph);
  const int left = block_with(bt, bc, {"a", "b", "c"});
  const int right = block_with(bt, bc, {"c", "d", "e"});

  AssemblyOptions opt;
  opt.root_block = right;
  auto r = check_c_planarity_report(bt, opt);
  ASSERT_EQ(r.trials.size(), 1u);
  EXPECT_EQ(r.trials[0].failure, "");
  EXPECT_TRUE(r.decision.c_planar());

  // The outer face of the left triangle is not enclosed by the cluster cycle,
  // so the left block as root also works; only the boundary shortcut rejects it.
  opt.root_block = left;
  auto l = check_c_planarity_report(bt, opt);
  ASSERT_EQ(l.trials.size(), 1u);
  EXPECT_EQ(l.trials[0].failure, "");
  ASSERT_EQ(l.free_faces.size(), 1u);
  EXPECT_TRUE(l.free_faces[0].free);
  EXPECT_FALSE(l.free_faces[0].boundary_free);
  EXPECT_TRUE(check_c_planar_embedding(bt, *l.decision.embedding));
}

TEST(Assembly, BoundaryShortcutRejectsEveryRootOfTriangleChain) {
  auto cg = triangle_chain();
  auto bc = bc_tree(cg.graph);
  for (int b = 0; b < static_cast<int>(bc.blocks.size()); ++b) {
    AssemblyOptions opt;
    opt.root_block = b;
    auto r = check_c_planarity_report(cg, opt);
    bool shortcut_fails = false;
    for (const auto& f : r.free_faces) shortcut_fails = shortcut_fails || !f.boundary_free;
    EXPECT_TRUE(shortcut_fails) << "root block " << b;
  }
  EXPECT_TRUE(oracle_c_planar(cg).c_planar);
}

TEST(Assembly, RelevantClusters) {
  auto bt = bowtie();
  auto bc = bc_tree(bt.graph);
  const int left = block_with(bt, bc, {"a", "b", "c"});
  const int right = block_with(bt, bc, {"c", "d", "e"});
  const VertexId c = vid(bt, "c");
  EXPECT_EQ(relevant_clusters(bt, root_bc_tree(bc, left), c, right), std::vector<int>{0});
  EXPECT_TRUE(relevant_clusters(bt, root_bc_tree(bc, right), c, left).empty());
  auto other = make({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"c", "d"}, {"d", "e"}, {"e", "c"}},
                    {cluster("de", {"d", "e"})});
  EXPECT_TRUE(relevant_clusters(other, root_bc_tree(bc, left), c, right).empty());
  EXPECT_EQ(exposed_vertices(bt, root_bc_tree(bc, left), left, 0), VertexSet{c});
}

TEST(Assembly, SuitableRoots) {
  auto tri = triangle();
  Block all{VertexSet{0, 1, 2}, {0, 1, 2}};
  auto bg = block_graph(tri.graph, all);
  EXPECT_EQ(suitable_roots(bg, -1).size(), 3u);
  EXPECT_EQ(suitable_roots(bg, vid(tri, "c")).size(), 2u);
  auto k4 = complete(4);
  Block whole{VertexSet{0, 1, 2, 3}, {0, 1, 2, 3, 4, 5}};
  EXPECT_EQ(suitable_roots(block_graph(k4.graph, whole), vid(k4, "1")).size(), 3u);
}

TEST(Assembly, FreeFaceOnWheel) {
  auto w = wheel();
  auto d = check_c_planarity(w);
  ASSERT_TRUE(d.c_planar());
  const Graph& g = w.graph;
  // Re-anchor the outer face at a triangle h,1,2.
  FaceMap fm(g, d.embedding->rotation);
  Embedding emb = *d.embedding;
  const DartId tri = dart_from(g, eid(w, "h", "1"), vid(w, "h"));
  if (fm.boundary(fm.face_of(tri)).size() == 3) emb.outer = {tri};
  else emb.outer = {dart_twin(tri)};
  if (!check_c_planar_embedding(w, emb)) GTEST_SKIP() << "rim encloses the hub in this embedding";
  EXPECT_TRUE(free_face_exists(g, emb, vid(w, "1"), {w.clusters[0].vertices}));
}

TEST(Assembly, StarOfBridges) {
  auto star = make({"c", "1", "2", "3"}, {{"c", "1"}, {"c", "2"}, {"c", "3"}}, {cluster("k", {"c", "1"})});
  auto d = check_c_planarity(star);
  ASSERT_TRUE(d.c_planar());
  EXPECT_EQ(d.embedding->rotation[vid(star, "c")].size(), 3u);
  EXPECT_TRUE(validate_embedding(star.graph, *d.embedding).empty());
}

TEST(Assembly, Preconditions) {
  EXPECT_THROW(check_c_planarity(cycle(4, {cluster("x", {"1", "3"})})), NotCConnected);
  auto k5 = complete(5, {cluster("all", {"1", "2", "3", "4", "5"})});
  auto d = check_c_planarity(k5);
  EXPECT_FALSE(d.c_planar());
  EXPECT_EQ(d.reason, "nonplanar");
}

TEST(Assembly, WholeVertexSetClusterIsPlanarity) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto cg = generated(seed);
    VertexSet all;
    for (VertexId v = 0; v < cg.graph.num_vertices(); ++v) all.push_back(v);
    cg.clusters = {Cluster{"all", all, {}}};
    EXPECT_TRUE(check_c_planarity(cg).c_planar()) << "seed " << seed;
  }
}

TEST(Assembly, AgreesWithOracleAndCertifies) {
  int no = 0;
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    auto cg = generated(seed, 5);
    auto d = check_c_planarity(cg);
    auto o = oracle_c_planar(cg);
    EXPECT_EQ(d.c_planar(), o.c_planar) << "seed " << seed;
    if (d.c_planar()) {
      EXPECT_TRUE(check_c_planar_embedding(cg, *d.embedding)) << "seed " << seed;
    } else {
      ++no;
    }
  }
  EXPECT_GT(no, 10);
}

TEST(Assembly, ReversedTieBreakKeepsFreeFaceVerdicts) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto cg = generated(seed, 5);
    AssemblyOptions a, b;
    b.tie = TieBreak::greatest;
    auto ra = check_c_planarity_report(cg, a);
    auto rb = check_c_planarity_report(cg, b);
    ASSERT_EQ(ra.free_faces.size(), rb.free_faces.size()) << "seed " << seed;
    for (std::size_t i = 0; i < ra.free_faces.size(); ++i) {
      EXPECT_EQ(ra.free_faces[i].free, rb.free_faces[i].free) << "seed " << seed;
    }
    EXPECT_EQ(ra.decision.c_planar(), rb.decision.c_planar());
  }
}

TEST(Assembly, ClusterRowsStayWithinBound) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto r = check_c_planarity_report(generated(seed, 5));
    EXPECT_EQ(r.row_bound_violations, 0) << "seed " << seed;
  }
}

// Around a vertex of a block, the edges of one block of H[C] are consecutive
// in every c-planar embedding.
TEST(Assembly, EquivalenceClassesAreConsecutive) {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto cg = generated(seed, 5);
    auto d = check_c_planarity(cg);
    if (!d.c_planar()) continue;
    const Graph& g = cg.graph;
    auto bc = bc_tree(g);
    for (const Block& block : bc.blocks) {
      if (block.is_bridge()) continue;
      std::vector<char> in_block(static_cast<std::size_t>(g.num_edges()), 0);
      for (EdgeId e : block.edges) in_block[e] = 1;
      auto rot = restrict_rotation(d.embedding->rotation, [&](EdgeId e) { return in_block[e] != 0; });
      for (const Cluster& c : cg.clusters) {
        // Blocks of H[C] give the classes; edges outside H[C] are singletons.
        Graph h(g.num_vertices());
        std::vector<EdgeId> back;
        for (EdgeId e : block.edges) {
          if (contains(c.vertices, g.edge(e).u) && contains(c.vertices, g.edge(e).v)) {
            h.add_edge(g.edge(e).u, g.edge(e).v);
            back.push_back(e);
          }
        }
        std::vector<int> cls(static_cast<std::size_t>(g.num_edges()), -1);
        auto hb = bc_tree(h);
        for (int i = 0; i < static_cast<int>(hb.blocks.size()); ++i) {
          for (EdgeId e : hb.blocks[i].edges) cls[back[e]] = i;
        }
        for (VertexId v : block.vertices) {
          const auto& r = rot[v];
          std::map<int, int> runs;  // class -> number of maximal cyclic runs
          for (std::size_t i = 0; i < r.size(); ++i) {
            const int k = cls[r[i]];
            if (k < 0) continue;
            if (cls[r[(i + r.size() - 1) % r.size()]] != k || r.size() == 1) ++runs[k];
          }
          for (auto [k, n] : runs) {
            EXPECT_LE(n, 1) << "seed " << seed;
            ++checked;
          }
        }
      }
    }
  }
  EXPECT_GT(checked, 100);
}

// A face enclosed by a cluster cycle has only cluster vertices on its boundary.
TEST(Assembly, CoveredFacesHaveClusterBoundaries) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto cg = generated(seed, 5);
    auto d = check_c_planarity(cg);
    if (!d.c_planar()) continue;
    const Graph& g = cg.graph;
    FaceMap fm(g, d.embedding->rotation);
    auto outer_of = outer_dart_per_vertex(g, *d.embedding);
    for (const Cluster& c : cg.clusters) {
      InducedFaces view(g, fm, membership(g.num_vertices(), c.vertices), outer_of[c.vertices.front()]);
      for (int f = 0; f < fm.num_faces(); ++f) {
        if (view.is_outer_face(f)) continue;
        for (DartId dd : fm.boundary(f)) EXPECT_TRUE(contains(c.vertices, dart_tail(g, dd))) << "seed " << seed;
      }
    }
  }
}
