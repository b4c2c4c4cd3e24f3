#include "grouplines/io.hpp"

#include <json.hpp>

#include <set>
#include <sstream>

namespace grouplines {

namespace {

using Json = nlohmann::ordered_json;

Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"n", g.vertex_count()}, {"labels", g.labels()}, {"edges", std::move(edges)}};
}

std::size_t vertex_index(const Json& j, std::size_t n) {
  if (!j.is_number_integer() || j.get<long long>() < 0 ||
      static_cast<unsigned long long>(j.get<long long>()) >= n)
    throw GraphFormatError("edge endpoint is not a vertex index below " + std::to_string(n));
  return j.get<std::size_t>();
}

std::string dot_id(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string graph_to_json(const Graph& g) { return graph_json(g).dump(); }

Graph graph_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw GraphFormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw GraphFormatError("graph JSON must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 0)
    throw GraphFormatError("\"n\" must be a non-negative integer");
  const std::size_t n = j["n"].get<std::size_t>();
  if (!j.contains("edges") || !j["edges"].is_array())
    throw GraphFormatError("\"edges\" must be an array");

  Graph g(n);
  std::set<Edge> seen;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw GraphFormatError("each edge must be [u, v]");
    std::size_t u = vertex_index(e[0], n), v = vertex_index(e[1], n);
    if (u == v) throw GraphFormatError("loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw GraphFormatError("repeated edge [" + std::to_string(u) + ", " + std::to_string(v) + "]");
    g.add_edge(u, v);
  }
  if (j.contains("labels")) {
    const Json& labels = j["labels"];
    if (!labels.is_array()) throw GraphFormatError("\"labels\" must be an array");
    if (!labels.empty()) {
      if (labels.size() != n) throw GraphFormatError("\"labels\" must have n entries");
      std::vector<std::string> out;
      for (const auto& l : labels) {
        if (!l.is_string()) throw GraphFormatError("labels must be strings");
        out.push_back(l.get<std::string>());
      }
      g.set_labels(std::move(out));
    }
  }
  return g;
}

std::string graph_to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << dot_id(g.label(v)) << ";\n";
  for (const auto& [u, v] : g.edges())
    out << "  " << dot_id(g.label(u)) << " -- " << dot_id(g.label(v)) << ";\n";
  out << "}\n";
  return out.str();
}

std::string certificate_to_json(const LineCertificate& cert, bool complement_mode) {
  Json j;
  j["mode"] = complement_mode ? "co-line" : "line";
  j["verdict"] = cert.verdict ? "line" : "not-line";
  j["root"] = cert.root ? graph_json(*cert.root) : Json(nullptr);
  if (cert.forbidden) {
    j["forbidden"] = Json{{"index", cert.forbidden->pattern},
                          {"map", cert.forbidden->embedding.map}};
  } else {
    j["forbidden"] = nullptr;
  }
  return j.dump();
}

}  // namespace grouplines
