#include <doctest.h>

#include <map>
#include <set>

#include "grouplines/classification.hpp"
#include "oracle.hpp"

using namespace grouplines;

namespace {

GroupSpec spec(std::string_view text) { return parse_group_spec(text); }

PredicateResult pred(TheoremId id, std::string_view text) {
  const GroupSpec s = spec(text);
  return predicate(id, s, make_group(s));
}

const ReportRow& row_for(const VerificationReport& r, TheoremId id) {
  for (const auto& row : r.rows)
    if (row.theorem == id) return row;
  throw std::logic_error("missing row");
}

VerificationReport verify(std::string_view text) {
  const GroupSpec s = spec(text);
  return verify_group(s, make_group(s));
}

Graph proper_enhanced(std::string_view text) {
  return build_group_graph(make_group(spec(text)), GroupGraphKind::kProperEnhanced);
}

const std::vector<VerificationReport>& full_sweep() {
  static const std::vector<VerificationReport> reports = [] {
    CatalogOptions options;
    options.max_order = 96;
    return run_catalog(options);
  }();
  return reports;
}

}  // namespace

TEST_CASE("theorem ids") {
  CHECK(all_theorems().size() == 13);
  for (TheoremId id : all_theorems()) CHECK(parse_theorem_id(to_string(id)) == id);
  CHECK(to_string(TheoremId::kDihedral) == "C-dihedral");
  CHECK(to_string(TheoremId::kT3_10) == "T3.10");
  CHECK_FALSE(parse_theorem_id("T3.12"));
  CHECK_FALSE(parse_theorem_id("t3.1"));
}

TEST_CASE("predicate examples") {
  CHECK(pred(TheoremId::kT3_2, "dihedral:6").verdict == Verdict::kTrue);
  CHECK(pred(TheoremId::kT3_4, "quaternion:6").verdict == Verdict::kFalse);
  const PredicateResult sd16 = pred(TheoremId::kT3_6, "semidihedral:2");
  CHECK(sd16.verdict == Verdict::kFalse);
  CHECK(sd16.reason.find("a^4") != std::string::npos);

  CHECK(pred(TheoremId::kT3_2, "cyclic:6").verdict == Verdict::kNotApplicable);
  CHECK(pred(TheoremId::kT3_2, "quaternion:3").verdict == Verdict::kNotApplicable);
  CHECK(pred(TheoremId::kC3_3, "dihedral:3").verdict == Verdict::kNotApplicable);
  CHECK(pred(TheoremId::kT3_4, "dihedral:4").verdict == Verdict::kNotApplicable);
  CHECK(pred(TheoremId::kT3_7, "dihedral:3").verdict == Verdict::kNotApplicable);
  CHECK(pred(TheoremId::kT3_7, "quaternion:4").verdict == Verdict::kNotApplicable);
  CHECK(pred(TheoremId::kT3_9, "cyclic:9").verdict == Verdict::kNotApplicable);
  CHECK(pred(TheoremId::kT3_11, "cyclic:9").verdict == Verdict::kNotApplicable);

  CHECK(pred(TheoremId::kT3_7, "product(cyclic:2,cyclic:4)").verdict == Verdict::kTrue);
  CHECK(pred(TheoremId::kT3_7, "product(cyclic:4,cyclic:4)").verdict == Verdict::kTrue);
  CHECK(pred(TheoremId::kT3_7, "product(cyclic:3,cyclic:2,cyclic:4)").verdict == Verdict::kFalse);
  CHECK(pred(TheoremId::kT3_7, "product(cyclic:5,elemabelian:2^3)").verdict == Verdict::kTrue);
  CHECK(pred(TheoremId::kT3_7, "product(cyclic:3,quaternion:2)").verdict == Verdict::kTrue);
  CHECK(pred(TheoremId::kT3_7, "product(cyclic:3,dihedral:4)").verdict == Verdict::kTrue);
  CHECK(pred(TheoremId::kT3_7, "product(elemabelian:2^2,elemabelian:3^2)").verdict ==
        Verdict::kFalse);

  for (std::string_view g : {"cyclic:6", "elemabelian:2^3", "quaternion:2", "cyclic:27", "cyclic:1"})
    CHECK(pred(TheoremId::kT3_8, g).verdict == Verdict::kTrue);
  for (std::string_view g : {"cyclic:12", "dihedral:3", "quaternion:4", "elemabelian:3^2"})
    CHECK(pred(TheoremId::kT3_8, g).verdict == Verdict::kFalse);
}

TEST_CASE("graph verdict examples") {
  CHECK(graph_verdict(TheoremId::kT3_1, make_group(spec("cyclic:9"))).verdict);

  const GraphResult z2cubed = graph_verdict(TheoremId::kT3_11, make_group(spec("elemabelian:2^3")));
  CHECK(z2cubed.verdict);
  CHECK(are_isomorphic(proper_enhanced("elemabelian:2^3"), empty_graph(7)));

  const GroupTable z3z3 = make_group(spec("elemabelian:3^2"));
  const GraphResult no = graph_verdict(TheoremId::kT3_5, z3z3);
  CHECK_FALSE(no.verdict);
  REQUIRE(no.certificate.forbidden);
  CHECK(no.certificate.forbidden->pattern == 1);
  CHECK(no.certificate.forbidden->embedding.map[0] == z3z3.identity());
  CHECK(no.witness.find("pattern 1") == 0);
}

TEST_CASE("per-group reports") {
  const VerificationReport z6 = verify("cyclic:6");
  CHECK(z6.spec == "cyclic:6");
  CHECK(z6.order == 6);
  CHECK(z6.rows.size() == 13);
  const ReportRow& t31 = row_for(z6, TheoremId::kT3_1);
  CHECK(t31.predicate == Verdict::kFalse);
  CHECK(t31.graph == false);
  CHECK(t31.agree == true);
  const ReportRow& t38 = row_for(z6, TheoremId::kT3_8);
  CHECK(t38.predicate == Verdict::kTrue);
  CHECK(t38.graph == true);

  const VerificationReport q8 = verify("quaternion:2");
  for (TheoremId id : {TheoremId::kT3_4, TheoremId::kT3_10, TheoremId::kT3_11}) {
    CHECK(row_for(q8, id).predicate == Verdict::kTrue);
    CHECK(row_for(q8, id).graph == true);
  }
  // Q8 is a non-abelian 2-group: T3.7 is informational.
  const ReportRow& info = row_for(q8, TheoremId::kT3_7);
  CHECK(info.predicate == Verdict::kNotApplicable);
  CHECK(info.graph.has_value());
  CHECK_FALSE(info.agree.has_value());

  const ReportRow& z2z4 = row_for(verify("product(cyclic:2,cyclic:4)"), TheoremId::kT3_7);
  CHECK(z2z4.predicate == Verdict::kTrue);
  CHECK(z2z4.graph == true);
  CHECK(z2z4.witness.find("(i)") != std::string::npos);

  const ReportRow& cyclic_p = row_for(verify("cyclic:8"), TheoremId::kT3_9);
  CHECK(cyclic_p.predicate == Verdict::kNotApplicable);
  CHECK(cyclic_p.graph == true);

  const ReportRow& skipped = row_for(verify("cyclic:8"), TheoremId::kT3_2);
  CHECK_FALSE(skipped.graph.has_value());
  CHECK_FALSE(skipped.agree.has_value());
}

TEST_CASE("graph identities") {
  for (std::size_t n = 2; n <= 12; ++n) {
    const Graph g = build_group_graph(make_group(GroupSpec::quaternion(n)),
                                      GroupGraphKind::kProperEnhanced);
    CHECK(are_isomorphic(g, disjoint_union(complete_graph(2 * n - 2), copies(n, complete_graph(2)))));
  }
  struct Triple {
    std::size_t n, p, k;
  };
  for (const Triple t : {Triple{1, 2, 2}, Triple{1, 2, 3}, Triple{3, 2, 2}, Triple{1, 3, 2},
                         Triple{5, 2, 2}}) {
    const GroupSpec s = t.n == 1 ? GroupSpec::elementary_abelian(t.p, t.k)
                                 : GroupSpec::product({GroupSpec::cyclic(t.n),
                                                       GroupSpec::elementary_abelian(t.p, t.k)});
    std::size_t pk = 1;
    for (std::size_t i = 0; i < t.k; ++i) pk *= t.p;
    const Graph expected = copies((pk - 1) / (t.p - 1), complete_graph((t.p - 1) * t.n));
    CHECK(are_isomorphic(build_group_graph(make_group(s), GroupGraphKind::kProperEnhanced), expected));
  }
  for (std::size_t k = 1; k <= 6; ++k) {
    const Graph pg = build_group_graph(make_group(GroupSpec::elementary_abelian(2, k)),
                                       GroupGraphKind::kPower);
    CHECK(are_isomorphic(pg, star((std::size_t{1} << k) - 1)));
  }
  const Graph d6 = build_group_graph(make_group(spec("dihedral:3")), GroupGraphKind::kProperPower);
  CHECK(are_isomorphic(d6, line_graph(disjoint_union(star(2), copies(3, complete_graph(2))))));
}

TEST_CASE("T3.2 reduces to C3.3 on odd-order groups") {
  for (const auto& e : default_catalog()) {
    if (e.spec.order() > 96 || e.spec.order() % 2 == 0) continue;
    const GroupTable g = make_group(e.spec);
    if (is_cyclic(g)) continue;
    CAPTURE(to_string(e.spec));
    CHECK(predicate(TheoremId::kT3_2, e.spec, g).verdict ==
          predicate(TheoremId::kC3_3, e.spec, g).verdict);
  }
}

TEST_CASE("catalog") {
  const auto& catalog = default_catalog();
  std::set<std::string> names;
  for (const auto& e : catalog) {
    CHECK_NOTHROW(e.spec.validate());
    names.insert(to_string(e.spec));
  }
  CHECK(names.size() == catalog.size());
  CHECK(names.count("product(cyclic:3,quaternion:2)"));
  CHECK(names.count("product(cyclic:3,dihedral:4)"));

  CatalogOptions options;
  options.max_order = 24;
  options.families = {"quaternion"};
  const auto q = select_catalog(options);
  REQUIRE(q.size() == 5);
  CHECK(to_string(q.front().spec) == "quaternion:2");
  CHECK(to_string(q.back().spec) == "quaternion:6");
}

TEST_CASE("full sweep") {
  const auto& reports = full_sweep();
  std::map<TheoremId, std::size_t> applicable, false_rows;
  std::vector<std::string> disagreements;
  for (const auto& r : reports) {
    CHECK(r.rows.size() == 13);
    for (const auto& row : r.rows) {
      if (row.predicate != Verdict::kNotApplicable) {
        ++applicable[row.theorem];
        REQUIRE(row.graph.has_value());
        CHECK(row.agree == ((row.predicate == Verdict::kTrue) == *row.graph));
        if (row.predicate == Verdict::kFalse) ++false_rows[row.theorem];
      }
      if (row.agree == false) {
        CHECK_FALSE(row.witness.empty());
        disagreements.push_back(r.spec + " " + std::string(to_string(row.theorem)));
      }
    }
  }
  // Every theorem is exercised and has an in-hypothesis counterexample.
  for (TheoremId id : all_theorems()) {
    CAPTURE(to_string(id));
    CHECK(applicable[id] > 0);
    CHECK(false_rows[id] > 0);
  }
  // The only disagreements: T3.4 on Q_4n for odd prime n, where the involution
  // does not dominate the power graph and survives as a claw centre.
  CHECK(disagreements == std::vector<std::string>{"quaternion:3 T3.4", "quaternion:5 T3.4",
                                                  "quaternion:7 T3.4", "quaternion:11 T3.4"});
}

TEST_CASE("family spot checks") {
  std::set<std::size_t> q_pred, q_graph, d_pred, d_graph;
  for (const auto& r : full_sweep()) {
    const GroupSpec s = parse_group_spec(r.spec);
    if (auto* q = std::get_if<GroupSpec::GeneralizedQuaternion>(&s.kind)) {
      const ReportRow& row = row_for(r, TheoremId::kT3_4);
      if (row.predicate == Verdict::kTrue) q_pred.insert(q->n);
      if (row.graph == true) q_graph.insert(q->n);
    }
    if (auto* d = std::get_if<GroupSpec::Dihedral>(&s.kind)) {
      const ReportRow& row = row_for(r, TheoremId::kDihedral);
      if (row.predicate == Verdict::kTrue) d_pred.insert(d->n);
      if (row.graph == true) d_graph.insert(d->n);
    }
    if (std::holds_alternative<GroupSpec::Semidihedral>(s.kind)) {
      const ReportRow& row = row_for(r, TheoremId::kSemidihedral);
      CHECK(row.predicate == Verdict::kFalse);
      CHECK(row.graph == false);
    }
  }
  CHECK(q_pred == std::set<std::size_t>{2, 3, 4, 5, 7, 8, 11});
  CHECK(q_graph == std::set<std::size_t>{2, 4, 8});
  CHECK(d_pred == std::set<std::size_t>{3, 4, 5, 6, 7, 8, 9, 11, 13, 16});
  CHECK(d_graph == d_pred);
}

TEST_CASE("reports are deterministic across worker counts") {
  CatalogOptions options;
  options.max_order = 40;
  options.jobs = 1;
  const auto serial = run_catalog(options);
  options.jobs = 4;
  const auto parallel = run_catalog(options);
  CHECK(reports_to_csv(serial) == reports_to_csv(parallel));
  CHECK(reports_to_markdown(serial) == reports_to_markdown(parallel));
}

TEST_CASE("report formats") {
  const std::vector<VerificationReport> reports = {verify("product(cyclic:2,cyclic:4)")};
  const std::string csv = reports_to_csv(reports);
  CHECK(csv.rfind("spec,order,theorem,predicate,graph,agree,witness\n", 0) == 0);
  CHECK(csv.find("\"product(cyclic:2,cyclic:4)\",8,T3.7,true,true,yes,") != std::string::npos);
  CHECK(csv.find(",8,T3.1,false,false,yes,\"pattern 1 (claw K_{1,3}) at [(0, 0),") != std::string::npos);
  CHECK(csv.find(",C3.3,n/a,,,even order\n") != std::string::npos);
  const std::string md = reports_to_markdown(reports);
  CHECK(md.rfind("| spec | order | theorem | predicate | graph | agree | witness |\n", 0) == 0);
  CHECK(md.find("1 groups, 13 rows") != std::string::npos);
}
