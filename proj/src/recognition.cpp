#include "grouplines/recognition.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace grouplines {

namespace {

struct PatternData {
  const char* name;
  std::size_t n;
  std::vector<Edge> edges;
};

// Beineke's nine graphs. Numbers 1, 3, 5 and 6 are pinned by how the
// classification arguments use them (claw; K5 minus an edge; K4 with a
// vertex on two of its corners plus a pendant; K2 joined to 2K2).
const std::array<PatternData, kForbiddenCount>& pattern_data() {
  static const std::array<PatternData, kForbiddenCount> data = {{
      {"claw K_{1,3}", 4, {{0, 1}, {0, 2}, {0, 3}}},
      {"K_{2,3} plus an edge in the larger side", 5,
       {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 4}}},
      {"K5 minus an edge", 5,
       {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}},
      {"two triangles sharing an edge, pendants at the far corners", 6,
       {{0, 1}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {4, 5}}},
      {"K4 plus a vertex on two corners, with a pendant", 6,
       {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {1, 5}, {2, 3}, {2, 5}, {4, 5}}},
      {"K2 joined to 2K2", 6,
       {{0, 1}, {0, 2}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}},
      {"C5 plus a vertex on three consecutive cycle vertices", 6,
       {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 5}, {2, 3}, {2, 5}, {3, 4}}},
      {"fan K1 + P4 plus a vertex on its first rim edge", 6,
       {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}}},
      {"wheel W5", 6,
       {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 5}, {2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}},
  }};
  return data;
}

// Krausz partition search for one connected component with at least one
// edge. Once the split of a single vertex's neighbourhood into its (at most
// two) cliques is fixed, every other vertex's cliques are forced, so the
// search enumerates the possible splits at one vertex and propagates.
class KrauszSearch {
 public:
  explicit KrauszSearch(const Graph& g) : g_(g) {}

  std::optional<std::vector<std::vector<Vertex>>> run() {
    const std::size_t n = g_.vertex_count();
    Vertex u = 0;
    for (Vertex v = 1; v < n; ++v)
      if (g_.degree(v) < g_.degree(u)) u = v;
    for (const auto& [a, b] : splits(u)) {
      if (auto cliques = propagate(u, a, b)) return cliques;
    }
    return std::nullopt;
  }

 private:
  // Candidate partitions (A, B) of N(u) into two cliques. When both sides
  // have two or more vertices, the edges between them form a matching, so the
  // complement of N(u) has at most two components; otherwise one side has at
  // most one vertex.
  std::vector<std::pair<Bitset, Bitset>> splits(Vertex u) const {
    const std::size_t n = g_.vertex_count();
    const Bitset& nbrs = g_.neighbors(u);
    std::vector<Vertex> list;
    for (auto v = nbrs.find_first(); v != Bitset::npos; v = nbrs.find_next(v)) list.push_back(v);

    std::set<std::pair<Bitset, Bitset>> seen;
    std::vector<std::pair<Bitset, Bitset>> out;
    auto add = [&](Bitset a, Bitset b) {
      if (b < a) std::swap(a, b);
      if (seen.insert({a, b}).second) out.emplace_back(std::move(a), std::move(b));
    };

    // 2-colourings of the complement of N(u).
    std::vector<int> side(n, -1);
    std::vector<std::vector<Vertex>> comps;
    bool bipartite = true;
    for (Vertex s : list) {
      if (side[s] != -1) continue;
      comps.emplace_back();
      side[s] = 0;
      std::deque<Vertex> queue{s};
      while (!queue.empty()) {
        const Vertex x = queue.front();
        queue.pop_front();
        comps.back().push_back(x);
        for (Vertex y : list) {
          if (y == x || g_.adjacent(x, y)) continue;
          if (side[y] == -1) {
            side[y] = 1 - side[x];
            queue.push_back(y);
          } else if (side[y] == side[x]) {
            bipartite = false;
          }
        }
      }
    }
    if (bipartite && comps.size() <= 2) {
      const std::size_t combos = comps.size() == 2 ? 2 : 1;
      for (std::size_t flip = 0; flip < combos; ++flip) {
        Bitset a(n), b(n);
        for (std::size_t c = 0; c < comps.size(); ++c) {
          const bool swap = c == 1 && flip == 1;
          for (Vertex x : comps[c]) ((side[x] == 0) != swap ? a : b).set(x);
        }
        add(a, b);
      }
    }
    add(nbrs, Bitset(n));
    for (Vertex w : list) {
      Bitset a = nbrs, b(n);
      a.reset(w);
      b.set(w);
      add(a, b);
    }
    return out;
  }

  std::optional<std::vector<std::vector<Vertex>>> propagate(Vertex u, const Bitset& a,
                                                            const Bitset& b) const {
    const std::size_t n = g_.vertex_count();
    std::vector<Bitset> uncovered(n);
    for (Vertex v = 0; v < n; ++v) uncovered[v] = g_.neighbors(v);
    std::vector<int> count(n, 0);
    std::vector<std::vector<Vertex>> cliques;

    auto place = [&](Bitset members) -> bool {
      for (auto v = members.find_first(); v != Bitset::npos; v = members.find_next(v)) {
        if (count[v] >= 2) return false;
        Bitset others = members;
        others.reset(v);
        if (!others.is_subset_of(uncovered[v])) return false;
      }
      std::vector<Vertex> clique;
      for (auto v = members.find_first(); v != Bitset::npos; v = members.find_next(v)) {
        uncovered[v] -= members;
        ++count[v];
        clique.push_back(v);
      }
      cliques.push_back(std::move(clique));
      return true;
    };

    for (const Bitset* side : {&a, &b}) {
      if (side->none()) continue;
      Bitset members = *side;
      members.set(u);
      if (!place(members)) return std::nullopt;
    }

    bool progress = true;
    while (progress) {
      progress = false;
      for (Vertex v = 0; v < n; ++v) {
        if (uncovered[v].none()) continue;
        if (count[v] != 1) {
          if (count[v] >= 2) return std::nullopt;
          continue;
        }
        Bitset members = uncovered[v];
        members.set(v);
        if (!place(members)) return std::nullopt;
        progress = true;
      }
    }
    for (Vertex v = 0; v < n; ++v)
      if (uncovered[v].any()) return std::nullopt;
    return cliques;
  }

  const Graph& g_;
};

std::optional<ForbiddenWitness> scan(const ForbiddenCatalog& catalog, const Graph& host,
                                     bool complements) {
  for (const auto& e : catalog.entries()) {
    if (auto emb = find_induced_embedding(complements ? e.complement : e.graph, host)) {
      return ForbiddenWitness{e.number, std::move(*emb)};
    }
  }
  return std::nullopt;
}

}  // namespace

ForbiddenCatalog::ForbiddenCatalog() {
  const auto& data = pattern_data();
  for (std::size_t i = 0; i < kForbiddenCount; ++i) {
    Graph g(data[i].n, data[i].edges);
    Graph c = complement(g);
    entries_[i] = Entry{i + 1, data[i].name, std::move(g), std::move(c)};
  }
  for (const auto& e : entries_) {
    const std::string id = "forbidden pattern " + std::to_string(e.number);
    if (reconstruct_root(e.graph)) throw std::logic_error(id + " is a line graph");
    for (Vertex v = 0; v < e.graph.vertex_count(); ++v) {
      std::vector<Vertex> rest;
      for (Vertex w = 0; w < e.graph.vertex_count(); ++w)
        if (w != v) rest.push_back(w);
      if (!reconstruct_root(induced_subgraph(e.graph, rest)))
        throw std::logic_error(id + " is not minimal (delete vertex " + std::to_string(v) + ")");
    }
  }
  for (std::size_t i = 0; i < kForbiddenCount; ++i)
    for (std::size_t j = i + 1; j < kForbiddenCount; ++j)
      if (are_isomorphic(entries_[i].graph, entries_[j].graph))
        throw std::logic_error("forbidden patterns " + std::to_string(i + 1) + " and " +
                               std::to_string(j + 1) + " coincide");
}

const ForbiddenCatalog& forbidden_catalog() {
  static const ForbiddenCatalog catalog;
  return catalog;
}

std::optional<Graph> reconstruct_root(const Graph& g) {
  std::vector<std::vector<Vertex>> cliques;  // in g's vertex numbering
  for (const auto& comp : connected_components(g)) {
    if (comp.size() == 1) {
      cliques.push_back(comp);
      continue;
    }
    const Graph part = induced_subgraph(g, comp);
    auto found = KrauszSearch(part).run();
    if (!found) return std::nullopt;
    for (auto& clique : *found) {
      for (auto& v : clique) v = comp[v];
      cliques.push_back(std::move(clique));
    }
  }
  // Root vertices: one per clique, plus one private vertex for each g-vertex
  // lying in a single clique. Each g-vertex becomes the edge joining its two.
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> owner(n);
  for (std::size_t c = 0; c < cliques.size(); ++c)
    for (Vertex v : cliques[c]) owner[v].push_back(c);
  std::size_t root_order = cliques.size();
  for (Vertex v = 0; v < n; ++v)
    if (owner[v].size() == 1) ++root_order;
  Graph root(root_order);
  std::size_t next = cliques.size();
  for (Vertex v = 0; v < n; ++v) {
    if (owner[v].size() == 1) {
      root.add_edge(owner[v][0], next++);
    } else {
      root.add_edge(owner[v][0], owner[v][1]);
    }
  }
  return root;
}

LineCertificate is_line_graph(const Graph& g) {
  auto witness = scan(forbidden_catalog(), g, false);
  std::optional<Graph> root = reconstruct_root(g);
  if (witness.has_value() == root.has_value()) {
    throw std::logic_error("forbidden-pattern scan and root reconstruction disagree");
  }
  LineCertificate cert;
  cert.verdict = !witness;
  if (witness) {
    cert.forbidden = std::move(witness);
  } else {
    if (!are_isomorphic(line_graph(*root), g)) {
      throw std::logic_error("reconstructed root does not reproduce the input");
    }
    cert.root = std::move(root);
  }
  return cert;
}

LineCertificate is_complement_of_line_graph(const Graph& g) {
  auto witness = scan(forbidden_catalog(), g, true);
  LineCertificate via_complement = is_line_graph(complement(g));
  if (witness.has_value() == via_complement.verdict) {
    throw std::logic_error("complement-pattern scan and complement recognition disagree");
  }
  LineCertificate cert;
  cert.verdict = !witness;
  if (witness) {
    cert.forbidden = std::move(witness);
  } else {
    cert.root = std::move(via_complement.root);
  }
  return cert;
}

}  // namespace grouplines
