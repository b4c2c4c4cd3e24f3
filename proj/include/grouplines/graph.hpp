#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace grouplines {

using Vertex = std::size_t;
using Bitset = boost::dynamic_bitset<std::uint64_t>;
using Edge = std::pair<Vertex, Vertex>;

// Finite simple undirected graph with one adjacency bitset per vertex.
// Labels are optional: an unlabelled graph has an empty label vector.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const { return rows_.size(); }
  std::size_t edge_count() const;

  // Throws std::invalid_argument on loops or out-of-range endpoints.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const Bitset& neighbors(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return rows_[v].count(); }

  // Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;
  std::vector<std::size_t> degree_sequence() const;  // descending

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  // The vertex label, or its index when the graph is unlabelled.
  std::string label(Vertex v) const;
  void set_labels(std::vector<std::string> labels);

  // Labelled equality: same vertex count, same edges, same labels.
  bool operator==(const Graph& other) const = default;

 private:
  std::vector<Bitset> rows_;
  std::vector<std::string> labels_;
};

Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph complete_bipartite(std::size_t m, std::size_t n);
Graph star(std::size_t n);  // K_{1,n}, centre is vertex 0
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

Graph complement(const Graph& g);
Graph disjoint_union(std::span<const Graph> parts);
Graph disjoint_union(const Graph& a, const Graph& b);
// n disjoint copies of g.
Graph copies(std::size_t n, const Graph& g);
Graph join(const Graph& a, const Graph& b);

// One vertex per edge of g (in edges() order), adjacent iff the edges share
// an endpoint. Vertex labels name the source edge by its endpoint labels, "u-v".
Graph line_graph(const Graph& g);

// Vertices must be distinct and in range; the i-th vertex of the result is
// vertices[i] of g. Labels are carried over.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
Graph induced_subgraph(const Graph& g, const Bitset& vertices);

// Vertex sets of connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

// Injective map pattern vertex -> host vertex.
struct Embedding {
  std::vector<Vertex> map;
};

// True iff `e` is an induced embedding of `pattern` into `host`.
bool is_induced_embedding(const Graph& pattern, const Graph& host, const Embedding& e);

inline constexpr std::size_t kMaxPatternVertices = 8;

// Exhaustive backtracking search for an induced copy of `pattern` in `host`.
// Throws std::invalid_argument if the pattern has more than
// kMaxPatternVertices vertices.
std::optional<Embedding> find_induced_embedding(const Graph& pattern, const Graph& host);

// Exact isomorphism test. Returns a bijection g -> h when one exists.
std::optional<Embedding> are_isomorphic(const Graph& g, const Graph& h);

}  // namespace grouplines
