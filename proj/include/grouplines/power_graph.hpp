#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "grouplines/graph.hpp"
#include "grouplines/group.hpp"

namespace grouplines {

// The four graphs attached to a group.
enum class GroupGraphKind {
  kPower,          // P(G): x ~ y iff one is a power of the other
  kEnhanced,       // P_E(G): x ~ y iff <x, y> is cyclic
  kProperPower,    // P(G) minus its dominating vertices
  kProperEnhanced  // P_E(G) minus its dominating vertices
};

// CLI names: pg, epg, ppg, pepg.
std::string_view to_string(GroupGraphKind kind);
GroupGraphKind parse_graph_kind(std::string_view name);

// Vertex labels are the group's element labels. For the proper kinds the
// surviving vertices keep their labels and ascending element order.
Graph build_group_graph(const GroupTable& g, GroupGraphKind kind);

// Vertices adjacent to every other vertex. A one-vertex graph returns its
// vertex.
std::vector<Vertex> dominating_vertices(const Graph& graph);

// Elements that survive deleting the dominating vertices of P(G) (kind
// kPower) or P_E(G) (kind kEnhanced). Proper kinds are treated as their
// full counterparts.
std::vector<Element> proper_vertex_set(const GroupTable& g, GroupGraphKind kind);

}  // namespace grouplines
