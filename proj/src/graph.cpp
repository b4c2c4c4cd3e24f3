#include "grouplines/graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace grouplines {

Graph::Graph(std::size_t n) : rows_(n, Bitset(n)) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= vertex_count() || v >= vertex_count())
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  rows_[u].set(v);
  rows_[v].set(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  rows_[u].reset(v);
  rows_[v].reset(u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (auto v = rows_[u].find_next(u); v != Bitset::npos; v = rows_[u].find_next(v)) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> d;
  d.reserve(vertex_count());
  for (const auto& r : rows_) d.push_back(r.count());
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

std::string Graph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != vertex_count())
    throw std::invalid_argument("label count does not match vertex count");
  labels_ = std::move(labels);
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph complete_bipartite(std::size_t m, std::size_t n) {
  Graph g(m + n);
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = m; v < m + n; ++v) g.add_edge(u, v);
  return g;
}

Graph star(std::size_t n) { return complete_bipartite(1, n); }

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph cycle_graph(std::size_t n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Graph out(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  out.set_labels(g.labels());
  return out;
}

Graph disjoint_union(std::span<const Graph> parts) {
  std::size_t n = 0;
  bool labelled = false;
  for (const auto& p : parts) {
    n += p.vertex_count();
    labelled = labelled || p.has_labels();
  }
  Graph out(n);
  std::vector<std::string> labels;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& [u, v] : parts[i].edges()) out.add_edge(u + offset, v + offset);
    if (labelled) {
      for (Vertex v = 0; v < parts[i].vertex_count(); ++v) {
        labels.push_back(std::to_string(i) + ":" + parts[i].label(v));
      }
    }
    offset += parts[i].vertex_count();
  }
  out.set_labels(std::move(labels));
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const Graph parts[] = {a, b};
  return disjoint_union(parts);
}

Graph copies(std::size_t n, const Graph& g) {
  std::vector<Graph> parts(n, g);
  return disjoint_union(parts);
}

Graph join(const Graph& a, const Graph& b) {
  Graph out = disjoint_union(a, b);
  for (Vertex u = 0; u < a.vertex_count(); ++u)
    for (Vertex v = 0; v < b.vertex_count(); ++v) out.add_edge(u, a.vertex_count() + v);
  return out;
}

Graph line_graph(const Graph& g) {
  const auto edges = g.edges();
  Graph out(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto& [a, b] = edges[i];
      const auto& [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) out.add_edge(i, j);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(edges.size());
  for (const auto& [u, v] : edges) labels.push_back(g.label(u) + "-" + g.label(v));
  out.set_labels(std::move(labels));
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  const std::size_t k = vertices.size();
  Bitset seen(g.vertex_count());
  for (Vertex v : vertices) {
    if (v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
    if (seen.test(v)) throw std::invalid_argument("duplicate vertex in induced subgraph");
    seen.set(v);
  }
  Graph out(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (g.adjacent(vertices[i], vertices[j])) out.add_edge(i, j);
  if (g.has_labels()) {
    std::vector<std::string> labels;
    labels.reserve(k);
    for (Vertex v : vertices) labels.push_back(g.labels()[v]);
    out.set_labels(std::move(labels));
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const Bitset& vertices) {
  std::vector<Vertex> list;
  for (auto v = vertices.find_first(); v != Bitset::npos; v = vertices.find_next(v)) list.push_back(v);
  return induced_subgraph(g, list);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Vertex>> comps;
  Bitset unseen(n);
  unseen.set();
  for (auto start = unseen.find_first(); start != Bitset::npos; start = unseen.find_first()) {
    std::vector<Vertex> comp{start};
    unseen.reset(start);
    for (std::size_t head = 0; head < comp.size(); ++head) {
      Bitset fresh = g.neighbors(comp[head]) & unseen;
      for (auto v = fresh.find_first(); v != Bitset::npos; v = fresh.find_next(v)) comp.push_back(v);
      unseen -= fresh;
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_induced_embedding(const Graph& pattern, const Graph& host, const Embedding& e) {
  const std::size_t k = pattern.vertex_count();
  if (e.map.size() != k) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (e.map[i] >= host.vertex_count()) return false;
    for (std::size_t j = i + 1; j < k; ++j) {
      if (e.map[i] == e.map[j]) return false;
      if (pattern.adjacent(i, j) != host.adjacent(e.map[i], e.map[j])) return false;
    }
  }
  return true;
}

}  // namespace grouplines
