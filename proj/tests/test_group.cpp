#include <doctest.h>

#include <algorithm>
#include <set>

#include "grouplines/classification.hpp"
#include "grouplines/group.hpp"
#include "oracle.hpp"

using namespace grouplines;

namespace {

GroupTable group(std::string_view spec) { return make_group(parse_group_spec(spec)); }

std::set<Element> as_set(const Subgroup& s) { return {s.members().begin(), s.members().end()}; }

std::set<std::string> label_set(const GroupTable& g, const Subgroup& s) {
  std::set<std::string> out;
  for (Element x : s.members()) out.insert(g.label(x));
  return out;
}

std::vector<GroupTable> catalog_tables(std::size_t max_order) {
  std::vector<GroupTable> out;
  for (const auto& e : default_catalog())
    if (e.spec.order() <= max_order) out.push_back(make_group(e.spec));
  return out;
}

}  // namespace

TEST_CASE("cyclic table is addition mod n") {
  const GroupTable g = group("cyclic:6");
  CHECK(g.order() == 6);
  CHECK(g.identity() == 0);
  for (Element i = 0; i < 6; ++i)
    for (Element j = 0; j < 6; ++j) CHECK(g.mul(i, j) == (i + j) % 6);
}

TEST_CASE("presented families satisfy their relations") {
  SUBCASE("Q8 has exactly one involution") {
    const GroupTable g = group("quaternion:2");
    CHECK(g.order() == 8);
    std::size_t involutions = 0;
    for (Element x = 0; x < g.order(); ++x) involutions += oracle::order_of(g, x) == 2;
    CHECK(involutions == 1);
  }
  SUBCASE("SD16: b a = a^3 b") {
    const GroupTable g = group("semidihedral:2");
    CHECK(g.order() == 16);
    CHECK(g.mul(g.find("b"), g.find("a")) == g.find("a^3 b"));
  }
  SUBCASE("relations across the families") {
    for (std::size_t n = 3; n <= 10; ++n) {
      const GroupTable d = make_group(GroupSpec::dihedral(n));
      const Element a = d.find("a"), b = d.find("b");
      CHECK(oracle::order_of(d, a) == n);
      CHECK(d.mul(b, b) == d.identity());
      CHECK(d.mul(a, b) == d.mul(b, d.inverse(a)));
    }
    for (std::size_t n = 2; n <= 10; ++n) {
      const GroupTable q = make_group(GroupSpec::quaternion(n));
      const Element a = q.find("a"), b = q.find("b");
      CHECK(oracle::order_of(q, a) == 2 * n);
      CHECK(q.mul(b, b) == q.find("a^" + std::to_string(n)));
      CHECK(q.mul(a, b) == q.mul(b, q.inverse(a)));
    }
    for (std::size_t n = 2; n <= 6; ++n) {
      const GroupTable s = make_group(GroupSpec::semidihedral(n));
      const Element a = s.find("a"), b = s.find("b");
      CHECK(oracle::order_of(s, a) == 4 * n);
      CHECK(s.mul(b, b) == s.identity());
      CHECK(s.mul(b, a) == s.mul(s.find("a^" + std::to_string(2 * n - 1)), b));
    }
  }
  SUBCASE("normal form labels: powers of a, then a^i b") {
    const GroupTable g = group("dihedral:3");
    CHECK(g.labels() == std::vector<std::string>{"e", "a", "a^2", "b", "a b", "a^2 b"});
  }
}

TEST_CASE("direct products") {
  const GroupTable klein = direct_product(group("cyclic:2"), group("cyclic:2"));
  CHECK(klein.order() == 4);
  std::size_t involutions = 0;
  for (Element x = 0; x < 4; ++x) involutions += element_order(klein, x) == 2;
  CHECK(involutions == 3);

  const GroupTable z3q8 = group("product(cyclic:3,quaternion:2)");
  CHECK(z3q8.order() == 24);
  CHECK(is_nilpotent(z3q8));
  CHECK(oracle::nilpotent(z3q8));

  // Brute force gives four maximal cyclic subgroups of Z2 x Z4, not three:
  // <(1, 0)> and <(1, 2)> are both maximal.
  const GroupTable z2z4 = group("product(cyclic:2,cyclic:4)");
  const auto ms = maximal_cyclic_subgroups(z2z4);
  const auto brute = oracle::maximal_cyclic(z2z4);
  std::multiset<std::size_t> sizes, brute_sizes;
  for (const auto& m : ms) sizes.insert(m.size());
  for (const auto& m : brute) brute_sizes.insert(m.size());
  CHECK(sizes == brute_sizes);
  CHECK(sizes == std::multiset<std::size_t>{2, 2, 4, 4});

  CHECK(label_set(z2z4, cyclic_subgroup(z2z4, z2z4.find("(1, 1)"))) ==
        std::set<std::string>{"(0, 0)", "(1, 1)", "(0, 2)", "(1, 3)"});

  // make_group on a product and direct_product agree element by element.
  const GroupTable via_pairs = direct_product(group("cyclic:3"), group("quaternion:2"));
  CHECK(via_pairs.labels() == z3q8.labels());
  for (Element x = 0; x < 24; ++x)
    for (Element y = 0; y < 24; ++y) CHECK(via_pairs.mul(x, y) == z3q8.mul(x, y));
}

TEST_CASE("element orders and cyclic subgroups") {
  const GroupTable z6 = group("cyclic:6");
  CHECK(element_order(z6, z6.identity()) == 1);
  CHECK(element_order(z6, 2) == 3);
  const GroupTable q8 = group("quaternion:2");
  CHECK(element_order(q8, q8.find("b")) == 4);
  CHECK(cyclic_subgroup(q8, q8.identity()).size() == 1);
  const GroupTable d12 = group("dihedral:6");
  CHECK(cyclic_subgroup(d12, d12.find("a")).size() == 6);
}

TEST_CASE("maximal cyclic subgroups, T(G) and the center") {
  const GroupTable d12 = group("dihedral:6");
  const auto md = maximal_cyclic_subgroups(d12);
  REQUIRE(md.size() == 7);
  CHECK(md[0].size() == 6);
  CHECK(std::count_if(md.begin(), md.end(), [](const Subgroup& m) { return m.size() == 2; }) == 6);

  const auto mq = maximal_cyclic_subgroups(group("quaternion:2"));
  CHECK(mq.size() == 3);
  for (const auto& m : mq) CHECK(m.size() == 4);

  CHECK(maximal_cyclic_subgroups(group("cyclic:12")).size() == 1);

  for (std::size_t n = 2; n <= 12; ++n) {
    const GroupTable q = make_group(GroupSpec::quaternion(n));
    CHECK(label_set(q, tau(q)) == std::set<std::string>{"e", "a^" + std::to_string(n)});
  }
  for (std::size_t n = 3; n <= 16; ++n) {
    const GroupTable d = make_group(GroupSpec::dihedral(n));
    CHECK(tau(d).size() == 1);
  }
  for (std::size_t n = 1; n <= 20; ++n) CHECK(tau(make_group(GroupSpec::cyclic(n))).size() == n);

  CHECK(center(group("product(cyclic:2,cyclic:4)")).size() == 8);
  const GroupTable q8 = group("quaternion:2");
  CHECK(label_set(q8, center(q8)) == std::set<std::string>{"e", "a^2"});
  CHECK(center(d12).size() == 2);
}

TEST_CASE("nilpotency") {
  CHECK(is_nilpotent(group("product(cyclic:2,cyclic:4)")));
  CHECK_FALSE(is_nilpotent(group("dihedral:3")));
  CHECK(is_nilpotent(group("product(cyclic:3,quaternion:2)")));
  CHECK_FALSE(oracle::nilpotent(group("dihedral:3")));
}

TEST_CASE("totient") {
  CHECK(totient(1) == 1);
  CHECK(totient(6) == 2);
  CHECK(totient(12) == 4);
  for (std::size_t n = 2; n <= 64; ++n) {
    const GroupTable z = make_group(GroupSpec::cyclic(n));
    std::size_t generators = 0;
    for (Element x = 0; x < n; ++x) generators += cyclic_subgroup(z, x).size() == n;
    CHECK(totient(n) == generators);
  }
}

TEST_CASE("number theory helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(prime_power_base(1) == 0);
  CHECK(prime_power_base(64) == 2);
  CHECK(prime_power_base(81) == 3);
  CHECK(prime_power_base(12) == 0);
  CHECK(prime_factors(360) == std::vector<std::size_t>{2, 3, 5});
}

TEST_CASE("spec grammar") {
  for (std::string_view text :
       {"cyclic:6", "dihedral:6", "quaternion:4", "semidihedral:2", "elemabelian:3^2",
        "product(cyclic:3,quaternion:2)", "product(cyclic:5,product(cyclic:2,cyclic:4))"}) {
    CHECK(to_string(parse_group_spec(text)) == text);
  }
  CHECK(parse_group_spec("CYCLIC:6") == GroupSpec::cyclic(6));
  CHECK(parse_group_spec("Product(Cyclic:3,Quaternion:2)").order() == 24);
  for (std::string_view bad :
       {"", "cyclic", "cyclic:", "cyclic:0", "dihedral:2", "quaternion:1", "semidihedral:1",
        "elemabelian:4^2", "elemabelian:3^0", "product()", "product(cyclic:2", "cyclic:6 ",
        "torus:3", "cyclic:-1", "cyclic:99999999999999999999999"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(make_group(parse_group_spec(bad)), GroupError);
  }
}

TEST_CASE("order cap") {
  CHECK_THROWS_AS(make_group(GroupSpec::cyclic(513)), OrderCapError);
  CHECK_NOTHROW(make_group(GroupSpec::cyclic(512)));
  CHECK_THROWS_AS(make_group(GroupSpec::cyclic(20), 16), OrderCapError);
  CHECK_THROWS_AS(direct_product(group("cyclic:8"), group("cyclic:8"), 32), OrderCapError);
}

TEST_CASE("table validation rejects non-groups") {
  // Not a Latin square.
  CHECK_THROWS_AS(GroupTable(2, {0, 1, 1, 1}, 0, {"e", "x"}), GroupError);
  // Wrong identity.
  CHECK_THROWS_AS(GroupTable(2, {0, 1, 1, 0}, 1, {"e", "x"}), GroupError);
  // Latin square with identity 0 that is not associative (order 5 loop).
  const std::vector<Element> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3,
                                     3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  CHECK_THROWS_AS(GroupTable(5, loop, 0, {"0", "1", "2", "3", "4"}), GroupError);
}

TEST_CASE("catalog properties of groups match brute force") {
  for (const GroupTable& g : catalog_tables(96)) {
    CAPTURE(g.order());
    const auto ms = maximal_cyclic_subgroups(g);
    const auto brute = oracle::maximal_cyclic(g);
    std::set<std::set<Element>> mine;
    for (const auto& m : ms) mine.insert(as_set(m));
    CHECK(mine == std::set<std::set<Element>>(brute.begin(), brute.end()));
    CHECK(ms.size() == brute.size());
    CHECK(ms.size() != 2);
    CHECK(std::is_sorted(ms.begin(), ms.end(), [](const Subgroup& a, const Subgroup& b) {
      return a.size() != b.size() ? a.size() > b.size() : a < b;
    }));

    // Union is G; generators of a maximal cyclic subgroup lie in no other.
    std::set<Element> covered;
    for (const auto& m : ms) covered.insert(m.members().begin(), m.members().end());
    CHECK(covered.size() == g.order());
    for (const auto& m : ms)
      for (Element x : m.members()) {
        if (element_order(g, x) != m.size()) continue;
        for (const auto& other : ms)
          if (!(other == m)) CHECK_FALSE(other.contains(x));
      }

    // Subgroup invariants and Lagrange.
    auto check_subgroup = [&](const Subgroup& s) {
      CHECK(s.contains(g.identity()));
      CHECK(g.order() % s.size() == 0);
      for (Element x : s.members()) {
        CHECK(s.contains(g.inverse(x)));
        for (Element y : s.members()) CHECK(s.contains(g.mul(x, y)));
      }
    };
    for (const auto& m : ms) check_subgroup(m);
    check_subgroup(tau(g));
    check_subgroup(center(g));

    for (Element x = 0; x < g.order(); ++x) {
      CHECK(element_order(g, x) == cyclic_subgroup(g, x).size());
      CHECK(g.order() % element_order(g, x) == 0);
    }
    CHECK(as_set(center(g)) == oracle::center(g));
    CHECK(is_nilpotent(g) == oracle::nilpotent(g));
  }
}

TEST_CASE("maximal cyclic subgroups of coprime products factor") {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"cyclic:3", "quaternion:2"},    {"cyclic:5", "quaternion:2"},
      {"cyclic:3", "dihedral:4"},      {"cyclic:3", "elemabelian:2^2"},
      {"cyclic:5", "product(cyclic:4,cyclic:4)"},
  };
  for (const auto& [left, right] : pairs) {
    CAPTURE(left);
    CAPTURE(right);
    const GroupTable g = group(left), h = group(right);
    const GroupTable gh = direct_product(g, h);
    const auto mg = maximal_cyclic_subgroups(g), mh = maximal_cyclic_subgroups(h);
    const auto mgh = maximal_cyclic_subgroups(gh);
    CHECK(mgh.size() == mg.size() * mh.size());
    std::set<std::set<Element>> expected;
    for (const auto& a : mg)
      for (const auto& b : mh) {
        std::set<Element> prod;
        for (Element x : a.members())
          for (Element y : b.members()) prod.insert(static_cast<Element>(x * h.order() + y));
        expected.insert(prod);
      }
    std::set<std::set<Element>> got;
    for (const auto& m : mgh) got.insert(as_set(m));
    CHECK(got == expected);
  }
}

TEST_CASE("structural recognisers") {
  for (std::size_t n = 2; n <= 12; ++n)
    CHECK(quaternion_parameter(make_group(GroupSpec::quaternion(n))) == n);
  for (std::size_t n = 3; n <= 16; ++n)
    CHECK(dihedral_parameter(make_group(GroupSpec::dihedral(n))) == n);
  for (std::size_t n = 2; n <= 6; ++n)
    CHECK(semidihedral_parameter(make_group(GroupSpec::semidihedral(n))) == n);
  CHECK_FALSE(quaternion_parameter(group("dihedral:4")));
  CHECK_FALSE(quaternion_parameter(group("product(cyclic:2,cyclic:4)")));
  CHECK_FALSE(dihedral_parameter(group("quaternion:2")));
  CHECK_FALSE(dihedral_parameter(group("cyclic:6")));
  CHECK_FALSE(semidihedral_parameter(group("dihedral:8")));
  CHECK_FALSE(semidihedral_parameter(group("quaternion:4")));
  // D12 is also Z2 x D6; presentation search finds it either way.
  CHECK(dihedral_parameter(group("product(cyclic:2,dihedral:3)")) == 6);
  CHECK(is_elementary_abelian_2_group(group("elemabelian:2^4")));
  CHECK(is_elementary_abelian_2_group(group("cyclic:2")));
  CHECK_FALSE(is_elementary_abelian_2_group(group("cyclic:1")));
  CHECK_FALSE(is_elementary_abelian_2_group(group("cyclic:4")));
}
