#pragma once

#include <cplanar/clustered_graph.hpp>

#include <json.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cplanar {

struct ClusterSpec {
  std::string name;
  std::vector<std::string> vertices;
  std::optional<std::string> partition;
};

/// Builds an instance from named vertices, validating the file-level
/// invariants: unique vertex ids, simple graph, valid nonempty clusters, at
/// most two partition tags each of which partitions V.
inline ClusteredGraph make_clustered_graph(const std::vector<std::string>& vertices,
                                           const std::vector<std::pair<std::string, std::string>>& edges,
                                           const std::vector<ClusterSpec>& clusters) {
  ClusteredGraph cg;
  std::map<std::string, VertexId> index;
  for (const auto& name : vertices) {
    if (!index.emplace(name, static_cast<VertexId>(cg.vertex_names.size())).second)
      throw PreconditionError("duplicate vertex id '" + name + "'");
    cg.vertex_names.push_back(name);
  }
  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw PreconditionError("unknown vertex '" + name + "'");
    return it->second;
  };
  cg.graph = Graph(static_cast<int>(vertices.size()));
  for (const auto& [a, b] : edges) cg.graph.add_edge(lookup(a), lookup(b));
  if (!cg.graph.is_simple()) throw PreconditionError("instance graph must be simple");
  std::map<std::string, std::vector<int>> tags;
  for (const auto& spec : clusters) {
    Cluster c;
    c.name = spec.name;
    for (const auto& v : spec.vertices) c.vertices.push_back(lookup(v));
    const std::size_t before = c.vertices.size();
    c.vertices = normalized(std::move(c.vertices));
    if (c.vertices.size() != before) throw PreconditionError("cluster '" + spec.name + "' lists a vertex twice");
    c.partition = spec.partition;
    if (c.partition) tags[*c.partition].push_back(static_cast<int>(cg.clusters.size()));
    cg.clusters.push_back(std::move(c));
  }
  validate_clusters(cg);
  if (tags.size() > 2) throw PreconditionError("at most two partition tags are allowed");
  for (const auto& [tag, members] : tags) {
    std::vector<int> count(vertices.size(), 0);
    for (int ci : members) {
      for (VertexId v : cg.clusters[ci].vertices) ++count[v];
    }
    for (int c : count) {
      if (c != 1) throw PreconditionError("clusters tagged '" + tag + "' do not partition the vertex set");
    }
  }
  return cg;
}

inline ClusteredGraph instance_from_json(const nlohmann::json& doc) {
  try {
    std::vector<std::string> vertices;
    for (const auto& v : doc.at("vertices")) vertices.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    auto name = [](const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw PreconditionError("edges must be pairs of vertex ids");
      edges.emplace_back(name(e[0]), name(e[1]));
    }
    std::vector<ClusterSpec> clusters;
    if (doc.contains("clusters")) {
      for (const auto& c : doc.at("clusters")) {
        ClusterSpec spec;
        spec.name = c.at("name").get<std::string>();
        for (const auto& v : c.at("vertices")) spec.vertices.push_back(name(v));
        if (c.contains("partition") && !c.at("partition").is_null()) spec.partition = c.at("partition").get<std::string>();
        clusters.push_back(std::move(spec));
      }
    }
    return make_clustered_graph(vertices, edges, clusters);
  } catch (const nlohmann::json::exception& ex) {
    throw PreconditionError(std::string("malformed instance: ") + ex.what());
  }
}

inline ClusteredGraph parse_instance(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw PreconditionError(std::string("instance is not valid JSON: ") + ex.what());
  }
  return instance_from_json(doc);
}

inline nlohmann::json instance_to_json(const ClusteredGraph& cg) {
  nlohmann::json doc;
  doc["vertices"] = nlohmann::json::array();
  for (VertexId v = 0; v < cg.graph.num_vertices(); ++v) doc["vertices"].push_back(cg.name_of(v));
  doc["edges"] = nlohmann::json::array();
  for (const Edge& e : cg.graph.edges()) doc["edges"].push_back({cg.name_of(e.u), cg.name_of(e.v)});
  doc["clusters"] = nlohmann::json::array();
  for (const Cluster& c : cg.clusters) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["vertices"] = nlohmann::json::array();
    for (VertexId v : c.vertices) jc["vertices"].push_back(cg.name_of(v));
    if (c.partition) jc["partition"] = *c.partition;
    doc["clusters"].push_back(std::move(jc));
  }
  return doc;
}

enum class Verdict { c_planar, not_c_planar };

/// Result of a c-planarity test: a certified embedding or a reason.
struct Decision {
  Verdict verdict = Verdict::not_c_planar;
  std::optional<Embedding> embedding;
  std::string reason;  // nonplanar | inappropriate-at-all-roots | c1p-failure | free-face-failure | not-c-connected

  bool c_planar() const { return verdict == Verdict::c_planar; }
};

/// Vertex sequence of the face walk starting with dart d.
inline std::vector<VertexId> face_walk(const Graph& g, const FaceMap& fm, DartId d) {
  std::vector<VertexId> out;
  DartId cur = d;
  do {
    out.push_back(dart_tail(g, cur));
    cur = fm.next(cur);
  } while (cur != d);
  return out;
}

inline nlohmann::json embedding_to_json(const ClusteredGraph& cg, const Embedding& emb) {
  const Graph& g = cg.graph;
  nlohmann::json rot = nlohmann::json::object();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    nlohmann::json list = nlohmann::json::array();
    for (EdgeId e : emb.rotation[v]) list.push_back(cg.name_of(g.opposite(e, v)));
    rot[cg.name_of(v)] = std::move(list);
  }
  FaceMap fm(g, emb.rotation);
  nlohmann::json outer = nlohmann::json::array();
  for (DartId d : emb.outer) {
    nlohmann::json cycle = nlohmann::json::array();
    for (VertexId v : face_walk(g, fm, d)) cycle.push_back(cg.name_of(v));
    outer.push_back(std::move(cycle));
  }
  nlohmann::json doc;
  doc["rotation"] = std::move(rot);
  doc["outer_face"] = outer.empty() ? nlohmann::json::array() : outer[0];
  doc["outer_faces"] = std::move(outer);
  return doc;
}

inline nlohmann::json decision_to_json(const ClusteredGraph& cg, const Decision& d) {
  nlohmann::json doc;
  doc["verdict"] = d.c_planar() ? "c-planar" : "not-c-planar";
  if (d.embedding) doc["embedding"] = embedding_to_json(cg, *d.embedding);
  if (!d.c_planar()) doc["reason"] = d.reason;
  return doc;
}

/// Reads an embedding back from a certificate. Returns nullopt (with a message
/// in `error`) when the document does not describe a rotation system of the
/// instance graph or names an outer face that is not a face walk.
inline std::optional<Embedding> embedding_from_json(const ClusteredGraph& cg, const nlohmann::json& doc,
                                                    std::string* error = nullptr) {
  auto fail = [&](const std::string& msg) -> std::optional<Embedding> {
    if (error) *error = msg;
    return std::nullopt;
  };
  const Graph& g = cg.graph;
  std::map<std::string, VertexId> index;
  for (VertexId v = 0; v < g.num_vertices(); ++v) index[cg.name_of(v)] = v;
  auto name = [](const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  Embedding emb;
  emb.rotation.resize(static_cast<std::size_t>(g.num_vertices()));
  try {
    const auto& rot = doc.at("rotation");
    if (!rot.is_object()) return fail("rotation must be an object");
    std::vector<char> seen_vertex(static_cast<std::size_t>(g.num_vertices()), 0);
    for (auto it = rot.begin(); it != rot.end(); ++it) {
      auto vi = index.find(it.key());
      if (vi == index.end()) return fail("rotation names unknown vertex '" + it.key() + "'");
      const VertexId v = vi->second;
      seen_vertex[v] = 1;
      for (const auto& nb : it.value()) {
        auto wi = index.find(name(nb));
        if (wi == index.end()) return fail("rotation names unknown vertex '" + name(nb) + "'");
        auto e = g.find_edge(v, wi->second);
        if (!e) return fail("rotation of " + it.key() + " lists non-neighbor " + name(nb));
        emb.rotation[v].push_back(*e);
      }
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (!seen_vertex[v] && g.degree(v) > 0) return fail("rotation missing for vertex " + cg.name_of(v));
    }
    if (auto err = rotation_error(g, emb.rotation); !err.empty()) return fail(err);
    std::vector<nlohmann::json> cycles;
    if (doc.contains("outer_faces")) {
      for (const auto& c : doc.at("outer_faces")) cycles.push_back(c);
    } else if (doc.contains("outer_face") && !doc.at("outer_face").empty()) {
      cycles.push_back(doc.at("outer_face"));
    }
    FaceMap fm(g, emb.rotation);
    for (const auto& cycle : cycles) {
      std::vector<VertexId> walk;
      for (const auto& v : cycle) {
        auto vi = index.find(name(v));
        if (vi == index.end()) return fail("outer face names unknown vertex");
        walk.push_back(vi->second);
      }
      if (walk.size() < 2) return fail("outer face walk is too short");
      auto e = g.find_edge(walk[0], walk[1]);
      if (!e) return fail("outer face walk uses a non-edge");
      const DartId d = dart_from(g, *e, walk[0]);
      if (face_walk(g, fm, d) != walk) return fail("outer face walk is not a face of the rotation system");
      emb.outer.push_back(d);
    }
  } catch (const nlohmann::json::exception& ex) {
    return fail(std::string("malformed certificate: ") + ex.what());
  }
  return emb;
}

/// Empty when `cert` holds an embedding that is valid and c-planar for every cluster of `cg`.
inline std::optional<std::string> certificate_error(const ClusteredGraph& cg, const nlohmann::json& cert) {
  if (!cert.is_object() || !cert.contains("embedding")) return "certificate carries no embedding";
  std::string why;
  auto emb = embedding_from_json(cg, cert.at("embedding"), &why);
  if (!emb) return why;
  return c_planarity_violation(cg, *emb);
}

}  // namespace cplanar
