#include "fixtures.hpp"

#include <cplanar/generator.hpp>
#include <cplanar/oracle.hpp>
#include <cplanar/planarity.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

using namespace cplanar;

namespace {

// Counts genus-0 rotation systems by trying every cyclic order at every vertex.
long brute_force_planar_rotations(const Graph& g) {
  std::vector<std::vector<EdgeId>> rot(static_cast<std::size_t>(g.num_vertices()));
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    rot[v] = g.incident(v);
    std::sort(rot[v].begin(), rot[v].end());
  }
  long count = 0;
  std::function<void(VertexId)> go = [&](VertexId v) {
    if (v == g.num_vertices()) {
      FaceMap fm(g, rot);
      if (g.num_vertices() - g.num_edges() + fm.num_faces() == 2) ++count;
      return;
    }
    if (rot[v].size() <= 2) {
      go(v + 1);
      return;
    }
    do {
      go(v + 1);
    } while (std::next_permutation(rot[v].begin() + 1, rot[v].end()));
  };
  go(0);
  return count;
}

long enumerated(const Graph& g) {
  long n = 0;
  for_each_embedding(g, [&](const std::vector<std::vector<EdgeId>>& rot) {
    EXPECT_TRUE(validate_embedding(g, Embedding{rot, {0}}).empty());
    ++n;
    return false;
  });
  return n;
}

}  // namespace

TEST(Enumeration, SmallExamples) {
  EXPECT_EQ(enumerated(fixtures::triangle().graph), 1);
  EXPECT_EQ(enumerated(fixtures::complete(4).graph), 2);
  EXPECT_EQ(enumerated(fixtures::theta().graph), 2);
  EXPECT_EQ(enumerated(fixtures::octahedron(false).graph), 2);
  auto star = fixtures::make({"c", "1", "2", "3", "4"}, {{"c", "1"}, {"c", "2"}, {"c", "3"}, {"c", "4"}});
  EXPECT_EQ(enumerated(star.graph), 6);
  EXPECT_EQ(enumerated(fixtures::complete(5).graph), 0);
}

TEST(Enumeration, MatchesBruteForceOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    GeneratorOptions opt;
    opt.vertices = 4 + static_cast<int>(seed % 4);
    opt.clusters = 0;
    opt.seed = seed;
    auto cg = generate_instance(opt);
    EXPECT_EQ(enumerated(cg.graph), brute_force_planar_rotations(cg.graph)) << "seed " << seed;
  }
}

TEST(Enumeration, BudgetIsEnforced) {
  auto star = fixtures::make({"c", "1", "2", "3", "4", "5", "6"},
                             {{"c", "1"}, {"c", "2"}, {"c", "3"}, {"c", "4"}, {"c", "5"}, {"c", "6"}});
  EXPECT_THROW(for_each_embedding(star.graph, [](const auto&) { return false; }, 50), BudgetExceeded);
}

TEST(Oracle, NamedFixtures) {
  EXPECT_FALSE(oracle_c_planar(fixtures::octahedron()).c_planar);
  EXPECT_TRUE(oracle_c_planar(fixtures::octahedron(false)).c_planar);
  for (const auto& cg : {fixtures::wheel(), fixtures::bowtie(), fixtures::theta()}) {
    auto r = oracle_c_planar(cg);
    ASSERT_TRUE(r.c_planar);
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(check_c_planar_embedding(cg, *r.witness));
  }
}

TEST(Oracle, RejectsNonCConnected) {
  auto cg = fixtures::cycle(4, {fixtures::cluster("x", {"1", "3"})});
  EXPECT_THROW(oracle_c_planar(cg), PreconditionError);
}

TEST(Oracle, DisconnectedGraphWitness) {
  auto cg = fixtures::make({"a", "b", "c", "x", "y", "z", "w"},
                           {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"x", "y"}, {"y", "z"}, {"z", "x"}},
                           {fixtures::cluster("k", {"x", "y"})});
  auto r = oracle_c_planar(cg);
  ASSERT_TRUE(r.c_planar);
  EXPECT_EQ(r.witness->outer.size(), 2u);
  EXPECT_TRUE(check_c_planar_embedding(cg, *r.witness));
}

TEST(Oracle, WitnessesAreCPlanarOnRandomInstances) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    GeneratorOptions opt;
    opt.vertices = 4 + static_cast<int>(seed % 4);
    opt.clusters = 1 + static_cast<int>(seed % 3);
    opt.seed = seed;
    auto cg = generate_instance(opt);
    auto r = oracle_c_planar(cg);
    if (r.c_planar) {
      EXPECT_TRUE(check_c_planar_embedding(cg, *r.witness)) << "seed " << seed;
    }
  }
}

namespace {

struct RootedCase {
  Graph block;
  VertexSet c;
  VertexSet c_ext;
};

// Random 2-connected graph with a connected cluster and a random exposure set.
std::optional<RootedCase> rooted_case(std::uint64_t seed) {
  GeneratorOptions opt;
  opt.vertices = 4 + static_cast<int>(seed % 4);
  opt.clusters = 0;
  opt.seed = seed;
  auto cg = generate_instance(opt);
  auto bc = bc_tree(cg.graph);
  const Block* best = nullptr;
  for (const Block& b : bc.blocks) {
    if (b.edges.size() >= 3 && (!best || b.edges.size() > best->edges.size())) best = &b;
  }
  if (!best) return std::nullopt;
  RootedCase out;
  std::vector<VertexId> index;
  out.block = induced_subgraph(cg.graph, best->vertices, nullptr, &index);
  std::mt19937_64 rng(seed * 7919);
  detail::Rng grow(seed * 31);
  const int size = 2 + static_cast<int>(rng() % (out.block.num_vertices() - 1));
  out.c = detail::grow_connected(out.block, size, grow);
  for (VertexId v : out.c) {
    if (rng() % 3 == 0) out.c_ext.push_back(v);
  }
  return out;
}

}  // namespace

TEST(RootedOracle, CharacterizationAgreesPerEmbedding) {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    auto rc = rooted_case(seed);
    if (!rc) continue;
    auto tree = build_spqr(rc->block);
    for (EdgeId e = 0; e < rc->block.num_edges(); ++e) {
      auto rt = root_at(tree, tree.q_node(e));
      auto r = oracle_rooted(rt, rc->c, rc->c_ext);
      EXPECT_EQ(r.mismatches, 0) << "seed " << seed << " root edge " << e;
      EXPECT_EQ(r.characterized, r.definitional) << "seed " << seed << " root edge " << e;
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}
