#include "grouplines/classification.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace grouplines {

namespace {

constexpr std::array<TheoremId, 13> kAllTheorems = {
    TheoremId::kT3_1, TheoremId::kT3_2,  TheoremId::kC3_3,  TheoremId::kT3_4,
    TheoremId::kT3_5, TheoremId::kT3_6,  TheoremId::kT3_7,  TheoremId::kT3_8,
    TheoremId::kT3_9, TheoremId::kT3_10, TheoremId::kT3_11, TheoremId::kDihedral,
    TheoremId::kSemidihedral,
};

bool one_or_prime_power(std::size_t n) { return n == 1 || prime_power_base(n) != 0; }

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// x^k by repeated multiplication; orders here are small.
Element power(const GroupTable& g, Element x, std::size_t k) {
  Element y = g.identity();
  for (std::size_t i = 0; i < k; ++i) y = g.mul(y, x);
  return y;
}

// Looks for a of order `a_order` and b outside <a> with b^2 = b_square(a)
// and b a b^-1 = twist(a). With |G| = 2 * a_order such a pair presents G.
template <typename BSquare, typename Twist>
bool has_presentation(const GroupTable& g, std::size_t a_order, BSquare b_square, Twist twist) {
  if (g.order() != 2 * a_order) return false;
  for (Element a = 0; a < g.order(); ++a) {
    if (element_order(g, a) != a_order) continue;
    const Subgroup cyc = cyclic_subgroup(g, a);
    const Element want_square = b_square(a);
    const Element want_conj = twist(a);
    for (Element b = 0; b < g.order(); ++b) {
      if (cyc.contains(b)) continue;
      if (g.mul(b, b) != want_square) continue;
      if (g.mul(g.mul(b, a), g.inverse(b)) == want_conj) return true;
    }
  }
  return false;
}

std::string join_labels(const GroupTable& g, std::span<const Element> xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += g.label(xs[i]);
  }
  return out + "}";
}

std::string describe(const Subgroup& m) {
  const GroupTable& g = m.parent();
  // A maximal cyclic subgroup is named by its lowest-index generator.
  for (Element x : m.members())
    if (element_order(g, x) == m.size()) return "<" + g.label(x) + ">";
  return join_labels(g, m.members());
}

// Elements of s outside t.
std::vector<Element> minus(const Subgroup& s, const Subgroup& t) {
  std::vector<Element> out;
  for (Element x : s.members())
    if (!t.contains(x)) out.push_back(x);
  return out;
}

PredicateResult yes(std::string reason) { return {Verdict::kTrue, std::move(reason)}; }
PredicateResult no(std::string reason) { return {Verdict::kFalse, std::move(reason)}; }
PredicateResult not_applicable(std::string reason) {
  return {Verdict::kNotApplicable, std::move(reason)};
}

PredicateResult theorem_3_1(const GroupTable& g) {
  if (is_cyclic(g) && one_or_prime_power(g.order()))
    return yes("cyclic of prime power order");
  if (!is_cyclic(g)) return no("not cyclic");
  return no("cyclic of order " + std::to_string(g.order()) + ", not a prime power");
}

PredicateResult theorem_3_2(const GroupTable& g) {
  if (is_cyclic(g)) return not_applicable("cyclic");
  if (quaternion_parameter(g)) return not_applicable("generalized quaternion");
  const auto ms = maximal_cyclic_subgroups(g);
  for (const auto& m : ms) {
    if (m.size() != 6 && !one_or_prime_power(m.size()))
      return no("(i) fails: |" + describe(m) + "| = " + std::to_string(m.size()));
  }
  std::vector<const Subgroup*> two, other;
  for (const auto& m : ms) (is_power_of_two(m.size()) ? two : other).push_back(&m);
  for (std::size_t i = 0; i < two.size(); ++i) {
    for (std::size_t j = i + 1; j < two.size(); ++j) {
      const Subgroup ij = intersection(*two[i], *two[j]);
      if (ij.size() > 2)
        return no("(ii)(a) fails: |" + describe(*two[i]) + " & " + describe(*two[j]) +
                  "| = " + std::to_string(ij.size()));
      for (std::size_t k = j + 1; k < two.size(); ++k) {
        const Subgroup ijk = intersection(ij, *two[k]);
        if (ijk.size() != 1)
          return no("(ii)(a) fails: " + describe(*two[i]) + ", " + describe(*two[j]) + ", " +
                    describe(*two[k]) + " share " + join_labels(g, ijk.members()));
      }
    }
  }
  for (const Subgroup* s : other) {
    for (const auto& t : ms) {
      if (&t == s) continue;
      const Subgroup st = intersection(*s, t);
      if (st.size() != 1)
        return no("(ii)(b) fails: " + describe(*s) + " meets " + describe(t) + " in " +
                  join_labels(g, st.members()));
    }
  }
  return yes("orders in {6, p^a}; intersection conditions hold");
}

PredicateResult odd_order_criterion(const GroupTable& g) {
  if (is_cyclic(g)) return not_applicable("cyclic");
  if (g.order() % 2 == 0) return not_applicable("even order");
  const auto ms = maximal_cyclic_subgroups(g);
  for (const auto& m : ms)
    if (!one_or_prime_power(m.size()))
      return no("|" + describe(m) + "| = " + std::to_string(m.size()) + " is not a prime power");
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (intersection(ms[i], ms[j]).size() != 1)
        return no(describe(ms[i]) + " and " + describe(ms[j]) + " intersect non-trivially");
  return yes("prime power orders, pairwise trivial intersections");
}

PredicateResult theorem_3_4(const GroupTable& g) {
  const auto n = quaternion_parameter(g);
  if (!n) return not_applicable("not generalized quaternion");
  const std::string tag = "n = " + std::to_string(*n);
  if (is_power_of_two(*n)) return yes(tag + " is a power of 2");
  if (*n % 2 == 1 && is_prime(*n)) return yes(tag + " is an odd prime");
  return no(tag + " is neither an odd prime nor a power of 2");
}

PredicateResult theorem_3_5(const GroupTable& g) {
  return is_cyclic(g) ? yes("cyclic") : no("not cyclic");
}

PredicateResult theorem_3_6(const GroupTable& g) {
  if (is_cyclic(g)) return not_applicable("cyclic");
  const auto ms = maximal_cyclic_subgroups(g);
  const Subgroup t = tau(g);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      const Subgroup ij = intersection(ms[i], ms[j]);
      const auto extra = minus(ij, t);
      if (extra.size() > 1)
        return no("(i) fails: " + describe(ms[i]) + " & " + describe(ms[j]) + " minus T(G) is " +
                  join_labels(g, extra));
      if (extra.empty()) continue;
      for (std::size_t k = j + 1; k < ms.size(); ++k) {
        const auto extra3 = minus(intersection(ij, ms[k]), t);
        if (!extra3.empty())
          return no("(ii) fails: " + describe(ms[i]) + ", " + describe(ms[j]) + ", " +
                    describe(ms[k]) + " share " + join_labels(g, extra3) + " outside T(G)");
      }
    }
  }
  return yes("pair and triple intersections outside T(G) are small enough");
}

// Prime-power building blocks of a spec, keyed by prime. Cyclic factors split
// into their primary parts.
void collect_atoms(const GroupSpec& spec, std::map<std::size_t, std::vector<GroupSpec>>& atoms) {
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, GroupSpec::Product>) {
          for (const auto& f : k.factors) collect_atoms(f, atoms);
        } else if constexpr (std::is_same_v<K, GroupSpec::Cyclic>) {
          std::size_t n = k.n;
          for (std::size_t p : prime_factors(k.n)) {
            std::size_t q = 1;
            while (n % p == 0) {
              n /= p;
              q *= p;
            }
            atoms[p].push_back(GroupSpec::cyclic(q));
          }
        } else if constexpr (std::is_same_v<K, GroupSpec::ElementaryAbelian>) {
          atoms[k.p].push_back(spec);
        } else {
          const std::size_t order = spec.order();
          const std::size_t p = prime_power_base(order);
          if (p == 0) throw std::logic_error(to_string(spec) + " is not a p-group factor");
          atoms[p].push_back(spec);
        }
      },
      spec.kind);
}

PredicateResult theorem_3_7(const GroupSpec& spec, const GroupTable& g) {
  if (!is_nilpotent(g)) return not_applicable("not nilpotent");
  if (is_cyclic(g)) return not_applicable("cyclic");
  if (is_power_of_two(g.order()) && !is_abelian(g)) return not_applicable("non-abelian 2-group");

  std::map<std::size_t, std::vector<GroupSpec>> atoms;
  collect_atoms(spec, atoms);
  std::optional<GroupTable> sylow;
  std::size_t sylow_prime = 0;
  for (const auto& [p, parts] : atoms) {
    GroupTable candidate =
        make_group(parts.size() == 1 ? parts[0] : GroupSpec::product(parts), g.order());
    if (is_cyclic(candidate)) continue;
    if (sylow)
      return no("Sylow " + std::to_string(sylow_prime) + "- and " + std::to_string(p) +
                "-subgroups are both non-cyclic");
    sylow.emplace(std::move(candidate));
    sylow_prime = p;
  }
  if (!sylow) throw std::logic_error("non-cyclic group with only cyclic Sylow factors");
  const GroupTable& p_group = *sylow;
  const std::size_t n = g.order() / p_group.order();
  const std::string tag = "P = Sylow " + std::to_string(sylow_prime) + "-subgroup, n = " +
                          std::to_string(n);

  if (is_abelian(p_group)) {
    const std::size_t exp = exponent(p_group);
    if (exp == sylow_prime) return yes("(iii): " + tag + ", P elementary abelian");
    std::size_t involutions = 0;
    for (Element x = 0; x < p_group.order(); ++x)
      if (element_order(p_group, x) == 2) ++involutions;
    const bool z2_z4 = p_group.order() == 8 && exp == 4;
    const bool z4_z4 = p_group.order() == 16 && exp == 4 && involutions == 3;
    if (z2_z4 || z4_z4) {
      const std::string which = z2_z4 ? "(i) Z2 x Z4" : "(ii) Z4 x Z4";
      if (n == 1) return yes(which);
      return no(which + " with a cyclic factor of order " + std::to_string(n));
    }
    return no(tag + ", abelian but not Z2 x Z4, Z4 x Z4 or elementary abelian");
  }
  if (sylow_prime == 2 && quaternion_parameter(p_group)) return yes("(iv): " + tag + ", P generalized quaternion");
  const auto ms = maximal_cyclic_subgroups(p_group);
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (intersection(ms[i], ms[j]).size() != 1)
        return no(tag + ", maximal cyclic " + describe(ms[i]) + " and " + describe(ms[j]) +
                  " of P meet non-trivially");
  return yes("(v): " + tag + ", maximal cyclic subgroups of P meet trivially");
}

PredicateResult theorem_3_8(const GroupTable& g) {
  if (is_cyclic(g) && g.order() == 6) return yes("Z6");
  if (is_cyclic(g) && one_or_prime_power(g.order())) return yes("cyclic of prime power order");
  if (is_elementary_abelian_2_group(g)) return yes("elementary abelian 2-group");
  if (quaternion_parameter(g) == 2) return yes("Q8");
  return no("not Z6, Z2^k, Q8 or a cyclic p-group");
}

PredicateResult theorem_3_9(const GroupTable& g) {
  if (is_cyclic(g) && one_or_prime_power(g.order())) return not_applicable("cyclic p-group");
  if (is_cyclic(g) && g.order() == 6) return yes("Z6");
  if (is_elementary_abelian_2_group(g)) return yes("elementary abelian 2-group");
  if (quaternion_parameter(g) == 2) return yes("Q8");
  return no("not Z6, Z2^k or Q8");
}

PredicateResult theorem_3_10(const GroupTable& g) {
  if (is_cyclic(g)) return yes("cyclic");
  if (is_elementary_abelian_2_group(g)) return yes("elementary abelian 2-group");
  if (quaternion_parameter(g) == 2) return yes("Q8");
  return no("not cyclic, Z2^k or Q8");
}

PredicateResult theorem_3_11(const GroupTable& g) {
  if (is_cyclic(g)) return not_applicable("cyclic");
  if (is_elementary_abelian_2_group(g)) return yes("elementary abelian 2-group");
  if (quaternion_parameter(g) == 2) return yes("Q8");
  return no("not Z2^k or Q8");
}

PredicateResult dihedral_criterion(const GroupTable& g) {
  const auto n = dihedral_parameter(g);
  if (!n) return not_applicable("not dihedral");
  const std::string tag = "n = " + std::to_string(*n);
  if (*n == 6) return yes(tag);
  if (prime_power_base(*n) != 0) return yes(tag + " is a prime power");
  return no(tag + " is neither 6 nor a prime power");
}

// Three distinct maximal cyclic subgroups with a common non-identity element
// x give a claw at x in the proper power graph. For semidihedral groups this
// always happens.
PredicateResult semidihedral_criterion(const GroupTable& g) {
  if (!semidihedral_parameter(g)) return not_applicable("not semidihedral");
  const auto ms = maximal_cyclic_subgroups(g);
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      const Subgroup ij = intersection(ms[i], ms[j]);
      if (ij.size() == 1) continue;
      for (std::size_t k = j + 1; k < ms.size(); ++k) {
        const Subgroup ijk = intersection(ij, ms[k]);
        if (ijk.size() > 1)
          return no(describe(ms[i]) + ", " + describe(ms[j]) + ", " + describe(ms[k]) + " share " +
                    join_labels(g, ijk.members()));
      }
    }
  return yes("no three maximal cyclic subgroups share a non-identity element");
}

std::string summarize(const LineCertificate& cert, const Graph& graph, bool complement_mode) {
  std::ostringstream out;
  if (cert.verdict) {
    out << (complement_mode ? "complement root: " : "root: ") << cert.root->vertex_count()
        << " vertices, " << cert.root->edge_count() << " edges";
    return out.str();
  }
  const auto& w = *cert.forbidden;
  const auto& entry = forbidden_catalog().entry(w.pattern);
  out << (complement_mode ? "complement of pattern " : "pattern ") << w.pattern << " ("
      << entry.name << ") at [";
  for (std::size_t i = 0; i < w.embedding.map.size(); ++i) {
    if (i) out << ", ";
    out << graph.label(w.embedding.map[i]);
  }
  out << "]";
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_field(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string_view bool_cell(const std::optional<bool>& b) {
  if (!b) return "";
  return *b ? "true" : "false";
}

std::string_view agree_cell(const std::optional<bool>& b) {
  if (!b) return "";
  return *b ? "yes" : "no";
}

}  // namespace

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::kT3_1: return "T3.1";
    case TheoremId::kT3_2: return "T3.2";
    case TheoremId::kC3_3: return "C3.3";
    case TheoremId::kT3_4: return "T3.4";
    case TheoremId::kT3_5: return "T3.5";
    case TheoremId::kT3_6: return "T3.6";
    case TheoremId::kT3_7: return "T3.7";
    case TheoremId::kT3_8: return "T3.8";
    case TheoremId::kT3_9: return "T3.9";
    case TheoremId::kT3_10: return "T3.10";
    case TheoremId::kT3_11: return "T3.11";
    case TheoremId::kDihedral: return "C-dihedral";
    case TheoremId::kSemidihedral: return "C-semidihedral";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem_id(std::string_view name) {
  for (TheoremId id : kAllTheorems)
    if (to_string(id) == name) return id;
  return std::nullopt;
}

std::span<const TheoremId> all_theorems() { return kAllTheorems; }

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kTrue: return "true";
    case Verdict::kFalse: return "false";
    case Verdict::kNotApplicable: return "n/a";
  }
  return "?";
}

std::optional<std::size_t> quaternion_parameter(const GroupTable& g) {
  if (g.order() < 8 || g.order() % 4 != 0) return std::nullopt;
  const std::size_t n = g.order() / 4;
  const bool ok = has_presentation(
      g, 2 * n, [&](Element a) { return power(g, a, n); }, [&](Element a) { return g.inverse(a); });
  return ok ? std::optional(n) : std::nullopt;
}

std::optional<std::size_t> dihedral_parameter(const GroupTable& g) {
  if (g.order() < 6 || g.order() % 2 != 0) return std::nullopt;
  const std::size_t n = g.order() / 2;
  const bool ok = has_presentation(
      g, n, [&](Element) { return g.identity(); }, [&](Element a) { return g.inverse(a); });
  return ok ? std::optional(n) : std::nullopt;
}

std::optional<std::size_t> semidihedral_parameter(const GroupTable& g) {
  if (g.order() < 16 || g.order() % 8 != 0) return std::nullopt;
  const std::size_t n = g.order() / 8;
  const bool ok = has_presentation(
      g, 4 * n, [&](Element) { return g.identity(); },
      [&](Element a) { return power(g, a, 2 * n - 1); });
  return ok ? std::optional(n) : std::nullopt;
}

bool is_elementary_abelian_2_group(const GroupTable& g) {
  if (g.order() < 2 || !is_power_of_two(g.order())) return false;
  for (Element x = 0; x < g.order(); ++x)
    if (g.mul(x, x) != g.identity()) return false;
  return true;
}

PredicateResult predicate(TheoremId id, const GroupSpec& spec, const GroupTable& g) {
  switch (id) {
    case TheoremId::kT3_1: return theorem_3_1(g);
    case TheoremId::kT3_2: return theorem_3_2(g);
    case TheoremId::kC3_3: return odd_order_criterion(g);
    case TheoremId::kT3_4: return theorem_3_4(g);
    case TheoremId::kT3_5: return theorem_3_5(g);
    case TheoremId::kT3_6: return theorem_3_6(g);
    case TheoremId::kT3_7: return theorem_3_7(spec, g);
    case TheoremId::kT3_8: return theorem_3_8(g);
    case TheoremId::kT3_9: return theorem_3_9(g);
    case TheoremId::kT3_10: return theorem_3_10(g);
    case TheoremId::kT3_11: return theorem_3_11(g);
    case TheoremId::kDihedral: return dihedral_criterion(g);
    case TheoremId::kSemidihedral: return semidihedral_criterion(g);
  }
  throw std::logic_error("unhandled theorem id");
}

GraphQuestion graph_question(TheoremId id) {
  using K = GroupGraphKind;
  switch (id) {
    case TheoremId::kT3_1: return {K::kPower, false};
    case TheoremId::kT3_2:
    case TheoremId::kC3_3:
    case TheoremId::kT3_4:
    case TheoremId::kDihedral:
    case TheoremId::kSemidihedral: return {K::kProperPower, false};
    case TheoremId::kT3_5: return {K::kEnhanced, false};
    case TheoremId::kT3_6:
    case TheoremId::kT3_7: return {K::kProperEnhanced, false};
    case TheoremId::kT3_8: return {K::kPower, true};
    case TheoremId::kT3_9: return {K::kProperPower, true};
    case TheoremId::kT3_10: return {K::kEnhanced, true};
    case TheoremId::kT3_11: return {K::kProperEnhanced, true};
  }
  throw std::logic_error("unhandled theorem id");
}

GraphResult graph_verdict(TheoremId id, const GroupTable& g) {
  const GraphQuestion q = graph_question(id);
  const Graph graph = build_group_graph(g, q.kind);
  LineCertificate cert = q.complement ? is_complement_of_line_graph(graph) : is_line_graph(graph);
  std::string witness = summarize(cert, graph, q.complement);
  return {cert.verdict, std::move(cert), std::move(witness)};
}

std::size_t VerificationReport::disagreements() const {
  return std::count_if(rows.begin(), rows.end(),
                       [](const ReportRow& r) { return r.agree == false; });
}

std::size_t VerificationReport::agreements() const {
  return std::count_if(rows.begin(), rows.end(),
                       [](const ReportRow& r) { return r.agree == true; });
}

VerificationReport verify_group(const GroupSpec& spec, const GroupTable& g,
                                std::span<const TheoremId> theorems) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.spec = to_string(spec);
  report.order = g.order();

  std::map<std::pair<GroupGraphKind, bool>, std::pair<bool, std::string>> cache;
  auto graph_side = [&](TheoremId id) -> const std::pair<bool, std::string>& {
    const GraphQuestion q = graph_question(id);
    auto key = std::make_pair(q.kind, q.complement);
    auto it = cache.find(key);
    if (it == cache.end()) {
      GraphResult r = graph_verdict(id, g);
      it = cache.emplace(key, std::make_pair(r.verdict, std::move(r.witness))).first;
    }
    return it->second;
  };

  for (TheoremId id : theorems) {
    const PredicateResult pred = predicate(id, spec, g);
    ReportRow row{id, pred.verdict, std::nullopt, std::nullopt, {}};
    const bool informational =
        (id == TheoremId::kT3_7 && pred.reason == "non-abelian 2-group") ||
        (id == TheoremId::kT3_9 && pred.reason == "cyclic p-group");
    if (pred.verdict != Verdict::kNotApplicable || informational) {
      const auto& [verdict, witness] = graph_side(id);
      row.graph = verdict;
      row.witness = witness;
    }
    if (pred.verdict != Verdict::kNotApplicable) {
      row.agree = (pred.verdict == Verdict::kTrue) == *row.graph;
    }
    if (!row.witness.empty()) row.witness += "; ";
    row.witness += pred.reason;
    if (informational) row.witness += " (graph verdict informational)";
    report.rows.push_back(std::move(row));
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

const std::vector<CatalogEntry>& default_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    std::vector<CatalogEntry> c;
    using S = GroupSpec;
    for (std::size_t n = 1; n <= 64; ++n) c.push_back({"cyclic", S::cyclic(n)});
    for (std::size_t n = 3; n <= 16; ++n) c.push_back({"dihedral", S::dihedral(n)});
    for (std::size_t n = 2; n <= 12; ++n) c.push_back({"quaternion", S::quaternion(n)});
    for (std::size_t n = 2; n <= 6; ++n) c.push_back({"semidihedral", S::semidihedral(n)});
    for (std::size_t p : {2, 3, 5, 7}) {
      for (std::size_t k = 2, q = p * p; q <= 81; ++k, q *= p)
        c.push_back({"elemabelian", S::elementary_abelian(p, k)});
    }
    const S z2z4 = S::product({S::cyclic(2), S::cyclic(4)});
    const S z4z4 = S::product({S::cyclic(4), S::cyclic(4)});
    c.push_back({"product", z2z4});
    c.push_back({"product", z4z4});
    for (std::size_t n : {3, 5}) {
      c.push_back({"product", S::product({S::cyclic(n), S::cyclic(2), S::cyclic(4)})});
      c.push_back({"product", S::product({S::cyclic(n), S::cyclic(4), S::cyclic(4)})});
    }
    for (std::size_t n : {3, 5})
      for (std::size_t p : {2, 3})
        for (std::size_t k : {2, 3})
          c.push_back({"product", S::product({S::cyclic(n), S::elementary_abelian(p, k)})});
    c.push_back({"product", S::product({S::cyclic(3), S::quaternion(2)})});
    c.push_back({"product", S::product({S::cyclic(5), S::quaternion(2)})});
    c.push_back({"product", S::product({S::cyclic(3), S::dihedral(4)})});
    return c;
  }();
  return catalog;
}

std::vector<CatalogEntry> select_catalog(const CatalogOptions& options) {
  std::vector<CatalogEntry> out;
  for (const auto& e : default_catalog()) {
    if (e.spec.order() > options.max_order) continue;
    if (!options.families.empty() && !options.families.count(e.family)) continue;
    out.push_back(e);
  }
  return out;
}

std::vector<VerificationReport> run_catalog(const CatalogOptions& options) {
  const auto entries = select_catalog(options);
  std::vector<VerificationReport> reports(entries.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      try {
        const GroupTable g = make_group(entries[i].spec, options.max_order);
        reports[i] = verify_group(entries[i].spec, g, options.theorems);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(entries.size(), 1));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return reports;
}

std::string reports_to_csv(std::span<const VerificationReport> reports) {
  std::ostringstream out;
  out << "spec,order,theorem,predicate,graph,agree,witness\n";
  for (const auto& r : reports)
    for (const auto& row : r.rows)
      out << csv_field(r.spec) << ',' << r.order << ',' << to_string(row.theorem) << ','
          << to_string(row.predicate) << ',' << bool_cell(row.graph) << ','
          << agree_cell(row.agree) << ',' << csv_field(row.witness) << '\n';
  return out.str();
}

std::string reports_to_markdown(std::span<const VerificationReport> reports) {
  std::ostringstream out;
  std::size_t rows = 0, agree = 0, disagree = 0, skipped = 0;
  out << "| spec | order | theorem | predicate | graph | agree | witness |\n";
  out << "|---|---:|---|---|---|---|---|\n";
  for (const auto& r : reports) {
    for (const auto& row : r.rows) {
      ++rows;
      if (!row.agree) ++skipped;
      else if (*row.agree) ++agree;
      else ++disagree;
      out << "| " << md_field(r.spec) << " | " << r.order << " | " << to_string(row.theorem)
          << " | " << to_string(row.predicate) << " | " << bool_cell(row.graph) << " | "
          << agree_cell(row.agree) << " | " << md_field(row.witness) << " |\n";
    }
  }
  out << "\n" << reports.size() << " groups, " << rows << " rows: " << agree << " agree, "
      << disagree << " disagree, " << skipped << " not applicable\n";
  return out.str();
}

}  // namespace grouplines
