#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "grouplines/graph.hpp"
#include "grouplines/recognition.hpp"

namespace grouplines {

// Raised for malformed graph JSON.
class GraphFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"n": int, "labels": [...], "edges": [[u, v], ...]} on one line, with
// u < v and edges in lexicographic order. Unlabelled graphs emit "labels": [].
std::string graph_to_json(const Graph& g);

// Accepts the format above. Edge endpoints may come in either order; loops,
// repeated edges, out-of-range endpoints and a label count other than 0 or n
// are rejected with GraphFormatError.
Graph graph_from_json(std::string_view text);

// Undirected DOT with vertex labels as node names.
std::string graph_to_dot(const Graph& g);

// {"mode": "line"|"co-line", "verdict": "line"|"not-line",
//  "root": <graph JSON>|null, "forbidden": {"index": i, "map": [...]}|null}.
// In co-line mode "line" means the input is the complement of a line graph.
std::string certificate_to_json(const LineCertificate& cert, bool complement_mode);

}  // namespace grouplines
