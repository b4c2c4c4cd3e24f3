#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "grouplines/graph.hpp"

namespace grouplines {

namespace {

// Placement order for the pattern: highest degree first, then repeatedly the
// vertex with the most already-placed neighbours (ties to higher degree).
std::vector<Vertex> placement_order(const Graph& pattern) {
  const std::size_t k = pattern.vertex_count();
  std::vector<Vertex> order;
  std::vector<char> placed(k, 0);
  for (std::size_t step = 0; step < k; ++step) {
    Vertex best = k;
    std::size_t best_links = 0, best_degree = 0;
    for (Vertex v = 0; v < k; ++v) {
      if (placed[v]) continue;
      std::size_t links = 0;
      for (Vertex u : order) links += pattern.adjacent(u, v) ? 1 : 0;
      const std::size_t deg = pattern.degree(v);
      if (best == k || links > best_links || (links == best_links && deg > best_degree)) {
        best = v;
        best_links = links;
        best_degree = deg;
      }
    }
    placed[best] = 1;
    order.push_back(best);
  }
  return order;
}

class InducedSearch {
 public:
  InducedSearch(const Graph& pattern, const Graph& host)
      : pattern_(pattern), host_(host), order_(placement_order(pattern)) {
    const std::size_t k = pattern.vertex_count();
    const std::size_t n = host.vertex_count();
    // Host vertices able to carry each pattern vertex: enough neighbours and
    // enough non-neighbours.
    eligible_.assign(k, Bitset(n));
    for (Vertex p = 0; p < k; ++p) {
      const std::size_t pd = pattern.degree(p);
      const std::size_t pnd = k - 1 - pd;
      for (Vertex h = 0; h < n; ++h) {
        const std::size_t hd = host.degree(h);
        if (hd >= pd && n - 1 - hd >= pnd) eligible_[p].set(h);
      }
    }
    map_.assign(k, 0);
  }

  std::optional<Embedding> run() {
    if (pattern_.vertex_count() > host_.vertex_count()) return std::nullopt;
    Bitset used(host_.vertex_count());
    if (!extend(0, used)) return std::nullopt;
    return Embedding{map_};
  }

 private:
  bool extend(std::size_t depth, Bitset& used) {
    if (depth == order_.size()) return true;
    const Vertex p = order_[depth];
    Bitset cand = eligible_[p] - used;
    for (std::size_t d = 0; d < depth && cand.any(); ++d) {
      const Vertex q = order_[d];
      if (pattern_.adjacent(p, q)) {
        cand &= host_.neighbors(map_[q]);
      } else {
        cand -= host_.neighbors(map_[q]);
      }
    }
    for (auto h = cand.find_first(); h != Bitset::npos; h = cand.find_next(h)) {
      map_[p] = h;
      used.set(h);
      if (extend(depth + 1, used)) return true;
      used.reset(h);
    }
    return false;
  }

  const Graph& pattern_;
  const Graph& host_;
  std::vector<Vertex> order_;
  std::vector<Bitset> eligible_;
  std::vector<Vertex> map_;
};

// Colour refinement run jointly over two graphs so that colours are
// comparable between them.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine_colours(const Graph& g,
                                                                             const Graph& h) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> cg(n), ch(n);
  for (Vertex v = 0; v < n; ++v) {
    cg[v] = g.degree(v);
    ch[v] = h.degree(v);
  }
  std::size_t classes = 0;
  while (true) {
    using Signature = std::pair<std::size_t, std::vector<std::size_t>>;
    auto signature = [](const Graph& graph, const std::vector<std::size_t>& colour, Vertex v) {
      Signature s{colour[v], {}};
      const Bitset& row = graph.neighbors(v);
      for (auto u = row.find_first(); u != Bitset::npos; u = row.find_next(u)) {
        s.second.push_back(colour[u]);
      }
      std::sort(s.second.begin(), s.second.end());
      return s;
    };
    std::vector<Signature> sg(n), sh(n);
    std::map<Signature, std::size_t> ids;
    for (Vertex v = 0; v < n; ++v) {
      sg[v] = signature(g, cg, v);
      sh[v] = signature(h, ch, v);
      ids.emplace(sg[v], 0);
      ids.emplace(sh[v], 0);
    }
    std::size_t next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (Vertex v = 0; v < n; ++v) {
      cg[v] = ids[sg[v]];
      ch[v] = ids[sh[v]];
    }
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {cg, ch};
}

// Backtracking bijection search between two graphs of equal order, guided by
// refined colours.
std::optional<Embedding> match_graphs(const Graph& g, const Graph& h) {
  const std::size_t n = g.vertex_count();
  if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
  if (g.degree_sequence() != h.degree_sequence()) return std::nullopt;
  if (n == 0) return Embedding{};

  const auto [cg, ch] = refine_colours(g, h);
  {
    auto a = cg, b = ch;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  // BFS order over g so that each vertex after the first in a component has a
  // mapped neighbour; components start at their rarest colour.
  std::map<std::size_t, std::size_t> freq;
  for (auto c : cg) ++freq[c];
  std::vector<Vertex> order;
  std::vector<char> queued(n, 0);
  while (order.size() < n) {
    Vertex start = n;
    for (Vertex v = 0; v < n; ++v) {
      if (!queued[v] && (start == n || freq[cg[v]] < freq[cg[start]])) start = v;
    }
    queued[start] = 1;
    order.push_back(start);
    for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
      const Bitset& row = g.neighbors(order[head]);
      for (auto u = row.find_first(); u != Bitset::npos; u = row.find_next(u)) {
        if (!queued[u]) {
          queued[u] = 1;
          order.push_back(u);
        }
      }
    }
  }

  std::vector<Vertex> map(n, 0);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    const Vertex v = order[depth];
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || ch[w] != cg[v]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const Vertex u = order[d];
        ok = g.adjacent(u, v) == h.adjacent(map[u], w);
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (extend(depth + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return Embedding{map};
}

}  // namespace

std::optional<Embedding> find_induced_embedding(const Graph& pattern, const Graph& host) {
  if (pattern.vertex_count() > kMaxPatternVertices) {
    throw std::invalid_argument("pattern has more than " + std::to_string(kMaxPatternVertices) +
                                " vertices");
  }
  return InducedSearch(pattern, host).run();
}

std::optional<Embedding> are_isomorphic(const Graph& g, const Graph& h) {
  const std::size_t n = g.vertex_count();
  if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
  if (g.degree_sequence() != h.degree_sequence()) return std::nullopt;

  // Components are matched multiset-wise; isomorphism between components is
  // an equivalence, so greedy pairing is exact.
  const auto comps_g = connected_components(g);
  const auto comps_h = connected_components(h);
  if (comps_g.size() != comps_h.size()) return std::nullopt;
  if (comps_g.size() == 1) return match_graphs(g, h);

  std::vector<Graph> parts_h;
  parts_h.reserve(comps_h.size());
  for (const auto& c : comps_h) parts_h.push_back(induced_subgraph(h, c));
  std::vector<char> taken(comps_h.size(), 0);
  Embedding result{std::vector<Vertex>(n, 0)};
  for (const auto& cg : comps_g) {
    const Graph part = induced_subgraph(g, cg);
    bool matched = false;
    for (std::size_t j = 0; j < comps_h.size() && !matched; ++j) {
      if (taken[j] || comps_h[j].size() != cg.size()) continue;
      if (auto m = match_graphs(part, parts_h[j])) {
        taken[j] = 1;
        matched = true;
        for (std::size_t i = 0; i < cg.size(); ++i) result.map[cg[i]] = comps_h[j][m->map[i]];
      }
    }
    if (!matched) return std::nullopt;
  }
  return result;
}

}  // namespace grouplines
