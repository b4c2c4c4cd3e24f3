#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grouplines/group.hpp"
#include "grouplines/power_graph.hpp"
#include "grouplines/recognition.hpp"

namespace grouplines {

enum class TheoremId {
  kT3_1,   // P(G) is a line graph
  kT3_2,   // P**(G) is a line graph, G non-cyclic, not generalized quaternion
  kC3_3,   // P**(G) is a line graph, G non-cyclic of odd order
  kT3_4,   // P**(Q_4n) is a line graph
  kT3_5,   // P_E(G) is a line graph
  kT3_6,   // P_E**(G) is a line graph, G non-cyclic
  kT3_7,   // P_E**(G) is a line graph, G nilpotent (membership list)
  kT3_8,   // P(G) is the complement of a line graph
  kT3_9,   // P**(G) is the complement of a line graph
  kT3_10,  // P_E(G) is the complement of a line graph
  kT3_11,  // P_E**(G) is the complement of a line graph
  kDihedral,
  kSemidihedral,
};

std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view name);
std::span<const TheoremId> all_theorems();

enum class Verdict { kTrue, kFalse, kNotApplicable };
std::string_view to_string(Verdict v);

struct PredicateResult {
  Verdict verdict;
  std::string reason;
};

// Structural side of each classification. Decided from element orders,
// maximal cyclic subgroups and their intersections only; never builds a
// graph. The spec is consulted only to read off Sylow factors for T3.7.
PredicateResult predicate(TheoremId id, const GroupSpec& spec, const GroupTable& g);

// Which graph each theorem is about, and whether it asks for a line graph or
// for the complement of one.
struct GraphQuestion {
  GroupGraphKind kind;
  bool complement;
};
GraphQuestion graph_question(TheoremId id);

struct GraphResult {
  bool verdict;
  LineCertificate certificate;
  std::string witness;  // human-readable certificate summary
};

// Direct side: builds the theorem's graph and runs the recognizer.
GraphResult graph_verdict(TheoremId id, const GroupTable& g);

struct ReportRow {
  TheoremId theorem;
  Verdict predicate;
  std::optional<bool> graph;  // unset when not computed
  std::optional<bool> agree;  // unset for not-applicable rows
  std::string witness;
};

struct VerificationReport {
  std::string spec;
  std::size_t order = 0;
  std::vector<ReportRow> rows;
  double seconds = 0.0;

  std::size_t disagreements() const;
  std::size_t agreements() const;
};

// Runs every listed theorem on one group. Rows for out-of-hypothesis groups
// are kept with a not-applicable verdict. Two cases get an informational
// graph verdict: T3.7 on non-abelian 2-groups and T3.9 on cyclic p-groups.
VerificationReport verify_group(const GroupSpec& spec, const GroupTable& g,
                                std::span<const TheoremId> theorems = all_theorems());

// ---------------------------------------------------------------------------
// Group catalog

struct CatalogEntry {
  std::string family;  // cyclic, dihedral, quaternion, semidihedral, elemabelian, product
  GroupSpec spec;
};

const std::vector<CatalogEntry>& default_catalog();

struct CatalogOptions {
  std::size_t max_order = 96;
  std::set<std::string> families;  // empty selects every family
  std::vector<TheoremId> theorems{all_theorems().begin(), all_theorems().end()};
  std::size_t jobs = 1;
};

// Catalog entries passing the order and family filters, in catalog order.
std::vector<CatalogEntry> select_catalog(const CatalogOptions& options);

// Verifies every selected group. Reports come back in catalog order whatever
// the number of worker threads.
std::vector<VerificationReport> run_catalog(const CatalogOptions& options);

std::string reports_to_csv(std::span<const VerificationReport> reports);
std::string reports_to_markdown(std::span<const VerificationReport> reports);

// Structural recognisers used by the predicates.
std::optional<std::size_t> quaternion_parameter(const GroupTable& g);    // n of Q_4n
std::optional<std::size_t> dihedral_parameter(const GroupTable& g);      // n of D_2n, n >= 3
std::optional<std::size_t> semidihedral_parameter(const GroupTable& g);  // n of SD_8n, n >= 2
bool is_elementary_abelian_2_group(const GroupTable& g);                 // order 2^k, k >= 1

}  // namespace grouplines
