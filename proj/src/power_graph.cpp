#include "grouplines/power_graph.hpp"

#include <stdexcept>

namespace grouplines {

namespace {

Graph power_graph(const GroupTable& g) {
  const std::size_t n = g.order();
  Graph graph(n);
  for (Element x = 0; x < n; ++x) {
    // Walk x^2, x^3, ... around the cycle back to x.
    for (Element y = g.mul(x, x); y != x; y = g.mul(y, x)) graph.add_edge(x, y);
  }
  graph.set_labels(g.labels());
  return graph;
}

Graph enhanced_power_graph(const GroupTable& g) {
  Graph graph(g.order());
  for (const auto& m : maximal_cyclic_subgroups(g)) {
    const auto members = m.members();
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) graph.add_edge(members[i], members[j]);
  }
  graph.set_labels(g.labels());
  return graph;
}

Graph without_dominating(const Graph& full) {
  Bitset keep(full.vertex_count());
  keep.set();
  for (Vertex v : dominating_vertices(full)) keep.reset(v);
  return induced_subgraph(full, keep);
}

}  // namespace

std::string_view to_string(GroupGraphKind kind) {
  switch (kind) {
    case GroupGraphKind::kPower:
      return "pg";
    case GroupGraphKind::kEnhanced:
      return "epg";
    case GroupGraphKind::kProperPower:
      return "ppg";
    case GroupGraphKind::kProperEnhanced:
      return "pepg";
  }
  return "?";
}

GroupGraphKind parse_graph_kind(std::string_view name) {
  if (name == "pg") return GroupGraphKind::kPower;
  if (name == "epg") return GroupGraphKind::kEnhanced;
  if (name == "ppg") return GroupGraphKind::kProperPower;
  if (name == "pepg") return GroupGraphKind::kProperEnhanced;
  throw std::invalid_argument("unknown graph kind '" + std::string(name) +
                              "' (expected pg, epg, ppg or pepg)");
}

Graph build_group_graph(const GroupTable& g, GroupGraphKind kind) {
  switch (kind) {
    case GroupGraphKind::kPower:
      return power_graph(g);
    case GroupGraphKind::kEnhanced:
      return enhanced_power_graph(g);
    case GroupGraphKind::kProperPower:
      return without_dominating(power_graph(g));
    case GroupGraphKind::kProperEnhanced:
      return without_dominating(enhanced_power_graph(g));
  }
  throw std::logic_error("unhandled graph kind");
}

std::vector<Vertex> dominating_vertices(const Graph& graph) {
  std::vector<Vertex> out;
  const std::size_t n = graph.vertex_count();
  for (Vertex v = 0; v < n; ++v)
    if (graph.degree(v) + 1 == n) out.push_back(v);
  return out;
}

std::vector<Element> proper_vertex_set(const GroupTable& g, GroupGraphKind kind) {
  const bool enhanced =
      kind == GroupGraphKind::kEnhanced || kind == GroupGraphKind::kProperEnhanced;
  const Graph full = build_group_graph(g, enhanced ? GroupGraphKind::kEnhanced : GroupGraphKind::kPower);
  std::vector<char> dominating(g.order(), 0);
  for (Vertex v : dominating_vertices(full)) dominating[v] = 1;
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x)
    if (!dominating[x]) out.push_back(x);
  return out;
}

}  // namespace grouplines
