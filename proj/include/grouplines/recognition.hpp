#pragma once

#include <array>
#include <optional>
#include <string>

#include "grouplines/graph.hpp"

namespace grouplines {

inline constexpr std::size_t kForbiddenCount = 9;

// The nine minimal non-line graphs (Beineke), numbered 1..9, together with
// their complements. Entry 1 is the claw K_{1,3} with centre vertex 0.
class ForbiddenCatalog {
 public:
  struct Entry {
    std::size_t number;  // 1-based
    std::string name;
    Graph graph;
    Graph complement;
  };

  const std::array<Entry, kForbiddenCount>& entries() const { return entries_; }
  const Entry& entry(std::size_t number) const { return entries_.at(number - 1); }

 private:
  friend const ForbiddenCatalog& forbidden_catalog();
  ForbiddenCatalog();

  std::array<Entry, kForbiddenCount> entries_;
};

// The validated catalog. First use checks that every entry is a non-line
// graph and that every single-vertex deletion of it is a line graph; a failure
// throws std::logic_error.
const ForbiddenCatalog& forbidden_catalog();

struct ForbiddenWitness {
  std::size_t pattern;  // 1-based catalog number
  Embedding embedding;  // pattern vertex -> input vertex
};

// Positive certificates carry a root graph, negative ones a forbidden
// pattern embedded in the input.
struct LineCertificate {
  bool verdict = false;
  std::optional<Graph> root;
  std::optional<ForbiddenWitness> forbidden;
};

// Root graph R with L(R) isomorphic to g, found through a Krausz partition
// of every component, or nullopt when g is not a line graph. Isolated
// vertices become K_2 components; the empty graph has the empty root.
std::optional<Graph> reconstruct_root(const Graph& g);

// Scans the nine forbidden patterns and reconstructs a root; the two answers
// must agree, and a returned root must satisfy L(root) ~= g. Any
// inconsistency throws std::logic_error.
LineCertificate is_line_graph(const Graph& g);

// Scans the nine complement patterns on g and runs is_line_graph on the
// complement of g; both must agree. The root is a root of complement(g) and
// the witness embeds a complement pattern into g.
LineCertificate is_complement_of_line_graph(const Graph& g);

}  // namespace grouplines
