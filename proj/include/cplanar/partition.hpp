#pragma once

#include "assembly.hpp"

#include <map>
#include <stack>

namespace cplanar {

struct NotCoConnected : PreconditionError {
  using PreconditionError::PreconditionError;
};
struct NonplanarInput : PreconditionError {
  using PreconditionError::PreconditionError;
};
struct DisconnectedInput : PreconditionError {
  using PreconditionError::PreconditionError;
};

/// Partition of {0..n-1}; `index[v]` is the part holding v.
struct Partition {
  std::vector<VertexSet> parts;
  std::vector<int> index;

  int size() const { return static_cast<int>(parts.size()); }
};

inline Partition make_partition(int n, std::vector<VertexSet> parts) {
  Partition p;
  p.index.assign(static_cast<std::size_t>(n), -1);
  for (auto& part : parts) {
    part = normalized(std::move(part));
    if (part.empty()) throw PreconditionError("partition has an empty part");
    for (VertexId v : part) {
      if (v < 0 || v >= n) throw PreconditionError("partition names an unknown vertex");
      if (p.index[v] != -1) throw PreconditionError("partition parts overlap");
      p.index[v] = static_cast<int>(p.parts.size());
    }
    p.parts.push_back(std::move(part));
  }
  for (int i : p.index) {
    if (i < 0) throw PreconditionError("partition does not cover every vertex");
  }
  return p;
}

struct IntersectionPartition {
  std::vector<VertexSet> parts;
  std::vector<std::pair<int, int>> provenance;  // (B index, R index)
  long long ops = 0;                            // elementary steps, for the linearity check
};

/// Nonempty sets B_i ∩ R_j, found with one stack per R-part filled in B order.
inline IntersectionPartition intersection_partition(const Partition& pb, const Partition& pr) {
  if (pb.index.size() != pr.index.size()) throw PreconditionError("partitions have different ground sets");
  IntersectionPartition out;
  std::vector<std::vector<VertexId>> stacks(static_cast<std::size_t>(pr.size()));
  for (const VertexSet& b : pb.parts) {
    for (VertexId v : b) {
      stacks[pr.index[v]].push_back(v);
      ++out.ops;
    }
  }
  for (int j = 0; j < pr.size(); ++j) {
    int current = -1;
    for (VertexId v : stacks[j]) {
      ++out.ops;
      if (pb.index[v] != current) {
        current = pb.index[v];
        out.parts.emplace_back();
        out.provenance.emplace_back(current, j);
      }
      out.parts.back().push_back(v);
    }
  }
  for (auto& part : out.parts) part = normalized(std::move(part));
  return out;
}

/// Components of G[B_i ∩ R_j] over all nonempty intersections.
inline Partition connected_intersection_partition(const Graph& g, const Partition& pb, const Partition& pr) {
  std::vector<VertexSet> parts;
  for (const VertexSet& part : intersection_partition(pb, pr).parts) {
    for (auto& comp : induced_components(g, part)) parts.push_back(std::move(comp));
  }
  return make_partition(g.num_vertices(), std::move(parts));
}

/// Splits the clusters of `cg` into its two tagged partitions, in order of first tag appearance.
inline std::pair<Partition, Partition> tagged_partitions(const ClusteredGraph& cg) {
  std::vector<std::string> tags;
  std::map<std::string, std::vector<VertexSet>> by_tag;
  for (const Cluster& c : cg.clusters) {
    if (!c.partition) throw PreconditionError("cluster '" + c.name + "' has no partition tag");
    if (!by_tag.count(*c.partition)) tags.push_back(*c.partition);
    by_tag[*c.partition].push_back(c.vertices);
  }
  if (tags.size() != 2) throw PreconditionError("fast path needs exactly two partition tags");
  const int n = cg.graph.num_vertices();
  return {make_partition(n, by_tag[tags[0]]), make_partition(n, by_tag[tags[1]])};
}

struct TwoPartitionResult {
  Decision decision;
  Partition connected_parts;
  int bad_initial = 0;
  int rechoices = 0;
};

namespace detail {

inline ClusteredGraph with_parts(const Graph& g, const std::vector<VertexSet>& parts) {
  ClusteredGraph cg;
  cg.graph = g;
  for (std::size_t i = 0; i < parts.size(); ++i) cg.clusters.push_back({"P" + std::to_string(i + 1), parts[i], std::nullopt});
  return cg;
}

/// True iff V∖C lies in an inner face of G[C]. Assumes C and V∖C induce connected subgraphs.
inline bool is_bad(const Graph& g, const FaceMap& fm, DartId outer, const VertexSet& c) {
  if (static_cast<int>(c.size()) == g.num_vertices()) return false;
  InducedFaces view(g, fm, membership(g.num_vertices(), c), outer);
  VertexId w = 0;
  while (contains(c, w)) ++w;
  return !view.lies_in_outer(w);
}

inline int count_bad(const Graph& g, const FaceMap& fm, DartId outer, const std::vector<VertexSet>& clusters) {
  int bad = 0;
  for (const auto& c : clusters) bad += is_bad(g, fm, outer, c);
  return bad;
}

/// Faces proposed by the re-rooting argument for a bad cluster `c` whose other partition is `other`.
inline std::vector<int> reroot_candidates(const Graph& g, const FaceMap& fm, DartId outer, const VertexSet& c,
                                          const Partition& other) {
  std::vector<int> out;
  std::vector<char> seen(static_cast<std::size_t>(other.size()), 0);
  std::vector<int> crossing;
  for (VertexId v : c) {
    const int j = other.index[v];
    if (seen[j]) continue;
    seen[j] = 1;
    for (VertexId w : other.parts[j]) {
      if (!contains(c, w)) {
        crossing.push_back(j);
        break;
      }
    }
  }
  if (crossing.empty()) {
    // C is a union of parts of the other partition: any face in the region holding V∖C next to C.
    VertexId w = 0;
    while (contains(c, w)) ++w;
    InducedFaces region(g, fm, membership(g.num_vertices(), c), dart_from(g, g.incident(w).front(), w));
    for (int f = 0; f < fm.num_faces(); ++f) {
      if (!region.is_outer_face(f)) continue;
      for (DartId d : fm.boundary(f)) {
        if (contains(c, dart_tail(g, d))) {
          out.push_back(f);
          break;
        }
      }
    }
    return out;
  }
  for (int j : crossing) {
    const VertexSet& cp = other.parts[j];
    InducedFaces view(g, fm, membership(g.num_vertices(), cp), outer);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const auto [u, v] = g.edge(e);
      if (!contains(cp, u) || !contains(cp, v) || contains(c, u) == contains(c, v)) continue;
      for (DartId d : {make_dart(e, false), make_dart(e, true)}) {
        if (view.is_outer_face(fm.face_of(d))) out.push_back(fm.face_of(d));
      }
    }
  }
  return out;
}

}  // namespace detail

/// Decides (g, pb ∪ pr) through the connected intersection partition. Requires co-connectivity.
inline TwoPartitionResult check_two_partition(const Graph& g, const Partition& pb, const Partition& pr,
                                              const AssemblyOptions& opt = {}) {
  if (!is_connected(g)) throw DisconnectedInput("fast path requires a connected graph");
  if (!is_planar(g)) throw NonplanarInput("fast path requires a planar graph");
  std::vector<VertexSet> all = pb.parts;
  all.insert(all.end(), pr.parts.begin(), pr.parts.end());
  if (!is_c_co_connected(detail::with_parts(g, all)))
    throw NotCoConnected("fast path requires a c-co-connected instance");

  TwoPartitionResult res;
  res.connected_parts = connected_intersection_partition(g, pb, pr);
  res.decision = check_c_planarity(detail::with_parts(g, res.connected_parts.parts), opt);
  if (!res.decision.c_planar()) return res;

  Embedding& emb = *res.decision.embedding;
  FaceMap fm(g, emb.rotation);
  res.bad_initial = detail::count_bad(g, fm, emb.outer[0], all);
  int bad = res.bad_initial;
  const auto fine = detail::with_parts(g, res.connected_parts.parts);
  while (bad > 0) {
    int which = 0;
    while (!detail::is_bad(g, fm, emb.outer[0], all[which])) ++which;
    const Partition& other = which < pb.size() ? pr : pb;
    bool moved = false;
    for (int f : detail::reroot_candidates(g, fm, emb.outer[0], all[which], other)) {
      const DartId d = fm.boundary(f).front();
      const int now = detail::count_bad(g, fm, d, all);
      Embedding trial{emb.rotation, {d}};
      if (now < bad && !c_planarity_violation(fine, trial)) {
        emb.outer = {d};
        bad = now;
        moved = true;
        break;
      }
    }
    if (!moved) throw std::logic_error("outer face re-choice did not reduce the number of bad clusters");
    ++res.rechoices;
  }
  return res;
}

inline TwoPartitionResult check_two_partition(const ClusteredGraph& cg, const AssemblyOptions& opt = {}) {
  validate_clusters(cg);
  auto [pb, pr] = tagged_partitions(cg);
  return check_two_partition(cg.graph, pb, pr, opt);
}

}  // namespace cplanar
