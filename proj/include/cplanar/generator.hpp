#pragma once

#include <cplanar/clustered_graph.hpp>

#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace cplanar {

struct GeneratorOptions {
  int vertices = 6;
  int clusters = 2;
  std::uint64_t seed = 1;
  bool two_partitions = false;  // clusters become two tagged partitions with `clusters` parts each
  bool co_connected = false;    // reject until every cluster complement is connected
  int max_attempts = 10000;
};

namespace detail {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(uniform(0, static_cast<int>(items.size()) - 1))];
  }

 private:
  std::mt19937_64 engine_;
};

/// Random maximal planar graph: vertex insertions into random triangles
/// followed by random edge flips.
inline Graph random_triangulation(int n, Rng& rng) {
  using Tri = std::array<int, 3>;
  std::vector<Tri> faces{{0, 1, 2}, {1, 0, 2}};
  for (int x = 3; x < n; ++x) {
    const int f = rng.uniform(0, static_cast<int>(faces.size()) - 1);
    const Tri t = faces[f];
    faces[f] = {t[0], t[1], x};
    faces.push_back({t[1], t[2], x});
    faces.push_back({t[2], t[0], x});
  }
  auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  std::set<std::pair<int, int>> edges;
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (const Tri& t : faces) {
    for (int i = 0; i < 3; ++i) {
      if (edges.insert(key(t[i], t[(i + 1) % 3])).second) {
        ++degree[t[i]];
        ++degree[t[(i + 1) % 3]];
      }
    }
  }
  if (n >= 5) {
    const int flips = rng.uniform(0, 3 * n);
    for (int k = 0; k < flips; ++k) {
      const int f1 = rng.uniform(0, static_cast<int>(faces.size()) - 1);
      const int side = rng.uniform(0, 2);
      const int a = faces[f1][side], b = faces[f1][(side + 1) % 3], c = faces[f1][(side + 2) % 3];
      int f2 = -1, d = -1;
      for (int j = 0; j < static_cast<int>(faces.size()); ++j) {
        for (int i = 0; i < 3; ++i) {
          if (faces[j][i] == b && faces[j][(i + 1) % 3] == a) {
            f2 = j;
            d = faces[j][(i + 2) % 3];
          }
        }
      }
      if (f2 < 0 || c == d || degree[a] <= 3 || degree[b] <= 3 || edges.count(key(c, d))) continue;
      edges.erase(key(a, b));
      edges.insert(key(c, d));
      --degree[a];
      --degree[b];
      ++degree[c];
      ++degree[d];
      faces[f1] = {c, a, d};
      faces[f2] = {d, b, c};
    }
  }
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

/// Grows a connected vertex set of the requested size from a random seed vertex.
inline VertexSet grow_connected(const Graph& g, int size, Rng& rng) {
  std::vector<char> in(static_cast<std::size_t>(g.num_vertices()), 0);
  VertexSet out{rng.uniform(0, g.num_vertices() - 1)};
  in[out[0]] = 1;
  while (static_cast<int>(out.size()) < size) {
    std::vector<VertexId> frontier;
    for (VertexId v : out) {
      for (EdgeId e : g.incident(v)) {
        const VertexId w = g.opposite(e, v);
        if (!in[w]) frontier.push_back(w);
      }
    }
    if (frontier.empty()) break;
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    const VertexId w = rng.pick(frontier);
    in[w] = 1;
    out.push_back(w);
  }
  return normalized(std::move(out));
}

/// Partition of V into `parts` connected parts grown simultaneously from random seeds.
inline std::vector<VertexSet> grow_partition(const Graph& g, int parts, Rng& rng) {
  const int n = g.num_vertices();
  parts = std::max(1, std::min(parts, n));
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  std::vector<VertexId> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[i] = i;
  for (int p = 0; p < parts; ++p) {
    std::vector<VertexId> free;
    for (VertexId v : all) {
      if (owner[v] < 0) free.push_back(v);
    }
    owner[rng.pick(free)] = p;
  }
  int assigned = parts;
  while (assigned < n) {
    std::vector<std::pair<VertexId, int>> moves;
    for (VertexId v = 0; v < n; ++v) {
      if (owner[v] < 0) continue;
      for (EdgeId e : g.incident(v)) {
        const VertexId w = g.opposite(e, v);
        if (owner[w] < 0) moves.emplace_back(w, owner[v]);
      }
    }
    const auto [w, p] = rng.pick(moves);
    owner[w] = p;
    ++assigned;
  }
  std::vector<VertexSet> out(static_cast<std::size_t>(parts));
  for (VertexId v = 0; v < n; ++v) out[owner[v]].push_back(v);
  return out;
}

}  // namespace detail

/// Random connected planar instance with connected clusters; deterministic per seed.
inline ClusteredGraph generate_instance(const GeneratorOptions& opt) {
  if (opt.vertices < 3) throw PreconditionError("generator needs at least 3 vertices");
  if (opt.clusters < 0) throw PreconditionError("cluster count must be nonnegative");
  detail::Rng rng(opt.seed);
  for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
    Graph full = detail::random_triangulation(opt.vertices, rng);
    // Remove random edges while keeping the graph connected.
    std::vector<char> keep(static_cast<std::size_t>(full.num_edges()), 1);
    const int removals = rng.uniform(0, full.num_edges() - (opt.vertices - 1));
    for (int k = 0; k < removals; ++k) {
      const EdgeId e = rng.uniform(0, full.num_edges() - 1);
      if (!keep[e]) continue;
      keep[e] = 0;
      auto comp = component_labels(full, [](VertexId) { return true; }, [&](EdgeId x) { return keep[x] != 0; });
      if (std::any_of(comp.begin(), comp.end(), [](int c) { return c != 0; })) keep[e] = 1;
    }
    ClusteredGraph cg;
    cg.graph = Graph(opt.vertices);
    for (EdgeId e = 0; e < full.num_edges(); ++e) {
      if (keep[e]) cg.graph.add_edge(full.edge(e).u, full.edge(e).v);
    }
    for (VertexId v = 0; v < opt.vertices; ++v) cg.vertex_names.push_back(std::to_string(v + 1));
    if (opt.two_partitions) {
      const char* tags[2] = {"B", "R"};
      for (int p = 0; p < 2; ++p) {
        auto parts = detail::grow_partition(cg.graph, opt.clusters, rng);
        for (std::size_t i = 0; i < parts.size(); ++i)
          cg.clusters.push_back({std::string(tags[p]) + std::to_string(i + 1), parts[i], std::string(tags[p])});
      }
    } else {
      for (int k = 0; k < opt.clusters; ++k) {
        const int size = rng.uniform(2, opt.vertices);
        cg.clusters.push_back({"C" + std::to_string(k + 1), detail::grow_connected(cg.graph, size, rng), std::nullopt});
      }
    }
    if (opt.co_connected && !is_c_co_connected(cg)) continue;
    return cg;
  }
  throw PreconditionError("generator rejection budget exhausted");
}

}  // namespace cplanar
