#include "fixtures.hpp"

#include <cplanar/bc_tree.hpp>
#include <cplanar/generator.hpp>
#include <cplanar/planarity.hpp>

#include <gtest/gtest.h>

using namespace cplanar;
using namespace fixtures;

namespace {

int euler(const Graph& g, const Embedding& emb) {
  return g.num_vertices() - g.num_edges() + static_cast<int>(faces(g, emb).size());
}

}  // namespace

TEST(Components, Examples) {
  EXPECT_EQ(connected_components(triangle().graph).size(), 1u);
  EXPECT_EQ(connected_components(Graph(2)), (std::vector<VertexSet>{{0}, {1}}));
  EXPECT_EQ(connected_components(bowtie().graph).size(), 1u);
}

TEST(PlanarEmbed, Examples) {
  auto k4 = complete(4).graph;
  auto emb = planar_embed(k4);
  ASSERT_TRUE(emb);
  EXPECT_EQ(validate_embedding(k4, *emb), "");
  auto f = faces(k4, *emb);
  EXPECT_EQ(f.size(), 4u);
  for (const auto& face : f) EXPECT_EQ(face.boundary.size(), 3u);
  EXPECT_FALSE(planar_embed(complete(5).graph));
  auto c4 = cycle(4).graph;
  auto ec4 = planar_embed(c4);
  ASSERT_TRUE(ec4);
  auto fc4 = faces(c4, *ec4);
  ASSERT_EQ(fc4.size(), 2u);
  EXPECT_EQ(fc4[0].boundary.size(), 4u);
  EXPECT_EQ(fc4[1].boundary.size(), 4u);
  EXPECT_THROW(planar_embed(Graph(2)), PreconditionError);
}

TEST(Faces, SingleEdgeWalksTwice) {
  Graph g(2);
  g.add_edge(0, 1);
  auto emb = planar_embed(g);
  ASSERT_TRUE(emb);
  auto f = faces(g, *emb);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].boundary.size(), 2u);
}

TEST(PlanarEmbed, MultigraphCopies) {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(0, 1);
  auto emb = planar_embed(g);
  ASSERT_TRUE(emb);
  EXPECT_EQ(validate_embedding(g, *emb), "");
}

TEST(BcTree, Examples) {
  auto t = bc_tree(triangle().graph);
  EXPECT_EQ(t.blocks.size(), 1u);
  EXPECT_TRUE(t.cut_vertices.empty());
  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  auto p = bc_tree(path);
  EXPECT_EQ(p.blocks.size(), 2u);
  EXPECT_EQ(p.cut_vertices, VertexSet{1});
  for (const auto& b : p.blocks) EXPECT_TRUE(b.is_bridge());
  auto bt = bowtie();
  auto b = bc_tree(bt.graph);
  EXPECT_EQ(b.blocks.size(), 2u);
  EXPECT_EQ(b.cut_vertices, VertexSet{vid(bt, "c")});
}

TEST(BcTree, RootedBelowSets) {
  auto bt = bowtie();
  auto bc = bc_tree(bt.graph);
  const int left = bc.blocks[0].vertices == VertexSet{vid(bt, "a"), vid(bt, "b"), vid(bt, "c")} ? 0 : 1;
  auto rooted = root_bc_tree(bc, left);
  const int right = 1 - left;
  EXPECT_EQ(rooted.parent_cut[right], vid(bt, "c"));
  EXPECT_EQ(rooted.below[right], (VertexSet{vid(bt, "d"), vid(bt, "e")}));
  EXPECT_EQ(rooted.child_blocks_at(left, vid(bt, "c")), std::vector<int>{right});
}

TEST(BcTree, RandomPartitionOfEdgesAndTwoConnectedCase) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto cg = generate_instance({4 + static_cast<int>(seed % 7), 1, seed});
    auto bc = bc_tree(cg.graph);
    std::vector<int> count(static_cast<std::size_t>(cg.graph.num_edges()), 0);
    for (const auto& b : bc.blocks) {
      for (EdgeId e : b.edges) ++count[e];
    }
    for (int c : count) EXPECT_EQ(c, 1);
    for (VertexId v = 0; v < cg.graph.num_vertices(); ++v)
      EXPECT_EQ(bc.is_cut_vertex(v), contains(bc.cut_vertices, v));
    // Block-cut incidence graph is a tree: #blocks + #cuts - 1 incidences.
    std::size_t incidences = 0;
    for (VertexId v : bc.cut_vertices) incidences += bc.blocks_of_vertex[v].size();
    EXPECT_EQ(incidences, bc.blocks.size() + bc.cut_vertices.size() - 1);
  }
  auto oct = bc_tree(octahedron().graph);
  EXPECT_EQ(oct.blocks.size(), 1u);
  EXPECT_TRUE(oct.cut_vertices.empty());
}

TEST(ClusterPredicates, Examples) {
  auto oct = octahedron();
  EXPECT_TRUE(is_c_connected(oct));
  EXPECT_FALSE(is_c_co_connected(oct));
  auto c4 = cycle(4, {cluster("a", {"1", "2"}), cluster("b", {"3", "4"})});
  EXPECT_TRUE(is_c_connected(c4));
  EXPECT_TRUE(is_c_co_connected(c4));
  EXPECT_FALSE(is_c_connected(cycle(4, {cluster("x", {"1", "3"})})));
  EXPECT_TRUE(is_c_co_connected(cycle(4, {cluster("all", {"1", "2", "3", "4"})})));
}

TEST(CheckEmbedding, TriangleAnyEmbedding) {
  auto t = triangle({cluster("ab", {"a", "b"})});
  auto emb = planar_embed(t.graph);
  ASSERT_TRUE(emb);
  for (DartId d = 0; d < 2 * t.graph.num_edges(); ++d) {
    emb->outer = {d};
    EXPECT_TRUE(check_c_planar_embedding(t, *emb));
  }
}

TEST(CheckEmbedding, OctahedronNeverAndWheelWithRimOuter) {
  auto oct = octahedron();
  auto emb = planar_embed(oct.graph);
  ASSERT_TRUE(emb);
  for (DartId d = 0; d < 2 * oct.graph.num_edges(); ++d) {
    emb->outer = {d};
    EXPECT_FALSE(check_c_planar_embedding(oct, *emb));
  }
  auto w = wheel();
  auto ew = planar_embed(w.graph);
  ASSERT_TRUE(ew);
  FaceMap fm(w.graph, ew->rotation);
  int good = 0;
  for (DartId d = 0; d < 2 * w.graph.num_edges(); ++d) {
    ew->outer = {d};
    VertexSet around;
    for (DartId x : fm.boundary(fm.face_of(d))) around.push_back(dart_tail(w.graph, x));
    around = normalized(around);
    const bool has_hub = contains(around, vid(w, "h"));
    // A triangular face containing the hub as outer face leaves the hub outside the rim.
    EXPECT_EQ(check_c_planar_embedding(w, *ew), has_hub);
    good += has_hub;
  }
  EXPECT_GT(good, 0);
  EXPECT_THROW(check_c_planar_embedding(cycle(4, {cluster("x", {"1", "3"})}), *planar_embed(cycle(4).graph)),
               PreconditionError);
}

TEST(Properties, EulerAndWholeVertexSetCluster) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    auto cg = generate_instance({3 + static_cast<int>(seed % 9), 2, seed});
    auto emb = planar_embed(cg.graph);
    ASSERT_TRUE(emb);
    EXPECT_EQ(euler(cg.graph, *emb), 2);
    EXPECT_EQ(validate_embedding(cg.graph, *emb), "");
    ClusteredGraph all = cg;
    VertexSet v;
    for (VertexId x = 0; x < cg.graph.num_vertices(); ++x) v.push_back(x);
    all.clusters = {{"V", v, std::nullopt}};
    for (DartId d = 0; d < 2 * cg.graph.num_edges(); ++d) {
      emb->outer = {d};
      EXPECT_TRUE(check_c_planar_embedding(all, *emb));
    }
    EXPECT_TRUE(is_c_connected(cg));
  }
}

TEST(Generator, DeterministicAndValid) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    GeneratorOptions opt{7, 3, seed};
    EXPECT_EQ(instance_to_json(generate_instance(opt)).dump(), instance_to_json(generate_instance(opt)).dump());
    auto cg = generate_instance(opt);
    EXPECT_TRUE(is_connected(cg.graph));
    EXPECT_TRUE(is_planar(cg.graph));
    EXPECT_TRUE(cg.graph.is_simple());
    opt.two_partitions = true;
    opt.co_connected = true;
    opt.clusters = 2;
    auto tp = generate_instance(opt);
    EXPECT_TRUE(is_c_co_connected(tp));
    auto round = instance_from_json(instance_to_json(tp));
    EXPECT_EQ(instance_to_json(round).dump(), instance_to_json(tp).dump());
  }
}

TEST(Io, RejectsMalformedInstances) {
  EXPECT_THROW(parse_instance("{"), PreconditionError);
  EXPECT_THROW(parse_instance(R"({"vertices":["a","a"],"edges":[]})"), PreconditionError);
  EXPECT_THROW(parse_instance(R"({"vertices":["a","b"],"edges":[["a","b"],["b","a"]]})"), PreconditionError);
  EXPECT_THROW(parse_instance(R"({"vertices":["a","b"],"edges":[["a","c"]]})"), PreconditionError);
  EXPECT_THROW(parse_instance(R"({"vertices":["a","b"],"edges":[["a","b"]],
      "clusters":[{"name":"x","vertices":["a"],"partition":"B"}]})"),
               PreconditionError);
  EXPECT_NO_THROW(parse_instance(R"({"vertices":["a","b"],"edges":[["a","b"]],
      "clusters":[{"name":"x","vertices":["a"],"partition":"B"},{"name":"y","vertices":["b"],"partition":"B"}]})"));
}
