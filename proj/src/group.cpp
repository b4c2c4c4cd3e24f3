#include "grouplines/group.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

namespace grouplines {

namespace {

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
    return std::numeric_limits<std::size_t>::max();
  }
  return a * b;
}

std::size_t int_pow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = saturating_mul(r, base);
  return r;
}

std::string power_label(std::size_t i, std::size_t j) {
  std::string s;
  if (i == 1) {
    s = "a";
  } else if (i > 1) {
    s = "a^" + std::to_string(i);
  }
  if (j == 1) s += s.empty() ? "b" : " b";
  return s.empty() ? "e" : s;
}

// Builds the table of a group whose elements are a^i b^j, i < m, j in {0,1},
// indexed as i + m*j. `twist(k)` is the exponent r with b a^k = a^r b, and
// `b_squared` the exponent of a equal to b^2.
template <typename Twist>
GroupTable metacyclic(std::size_t m, Twist twist, std::size_t b_squared) {
  const std::size_t n = 2 * m;
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t i = x % m, j = x / m;
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t k = y % m, l = y / m;
      std::size_t exp = i + (j == 1 ? twist(k) : k);
      std::size_t bs = j + l;
      if (bs == 2) {
        exp += b_squared;
        bs = 0;
      }
      table[x * n + y] = static_cast<Element>(exp % m + m * bs);
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) labels[x] = power_label(x % m, x / m);
  return GroupTable(n, std::move(table), 0, std::move(labels));
}

GroupTable make_cyclic(std::size_t n) {
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Element>((i + j) % n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return GroupTable(n, std::move(table), 0, std::move(labels));
}

GroupTable make_elementary_abelian(std::size_t p, std::size_t k) {
  const std::size_t n = int_pow(p, k);
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t a = x, b = y, sum = 0, place = 1;
      for (std::size_t d = 0; d < k; ++d) {
        sum += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
      }
      table[x * n + y] = static_cast<Element>(sum);
    }
  }
  // Most significant coordinate first, matching product labels.
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::size_t> digits(k);
    std::size_t v = x;
    for (std::size_t d = 0; d < k; ++d) {
      digits[k - 1 - d] = v % p;
      v /= p;
    }
    std::string s = "(";
    for (std::size_t d = 0; d < k; ++d) {
      if (d > 0) s += ", ";
      s += std::to_string(digits[d]);
    }
    labels[x] = s + ")";
  }
  return GroupTable(n, std::move(table), 0, std::move(labels));
}

// Recursive descent over the spec grammar.
class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec spec = parse_spec();
    if (pos_ != text_.size()) fail("trailing characters");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw GroupError("cannot parse group spec '" + std::string(text_) + "': " + what +
                     " at position " + std::to_string(pos_));
  }

  std::string word() {
    std::string w;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      w += static_cast<char>(std::tolower(static_cast<unsigned char>(text_[pos_++])));
    }
    return w;
  }

  std::size_t number() {
    const std::size_t start = pos_;
    std::size_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(text_[pos_++] - '0');
      if (v > 1'000'000) fail("number too large");
    }
    if (pos_ == start) fail("expected a number");
    return v;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  GroupSpec parse_spec() {
    const std::string name = word();
    if (name == "product") {
      expect('(');
      std::vector<GroupSpec> factors;
      factors.push_back(parse_spec());
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        factors.push_back(parse_spec());
      }
      expect(')');
      return GroupSpec::product(std::move(factors));
    }
    expect(':');
    if (name == "cyclic") return GroupSpec::cyclic(number());
    if (name == "dihedral") return GroupSpec::dihedral(number());
    if (name == "quaternion") return GroupSpec::quaternion(number());
    if (name == "semidihedral") return GroupSpec::semidihedral(number());
    if (name == "elemabelian") {
      const std::size_t p = number();
      expect('^');
      return GroupSpec::elementary_abelian(p, number());
    }
    fail("unknown family '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::size_t GroupSpec::order() const {
  struct Visitor {
    std::size_t operator()(const Cyclic& c) const { return c.n; }
    std::size_t operator()(const Dihedral& d) const { return saturating_mul(2, d.n); }
    std::size_t operator()(const GeneralizedQuaternion& q) const {
      return saturating_mul(4, q.n);
    }
    std::size_t operator()(const Semidihedral& s) const { return saturating_mul(8, s.n); }
    std::size_t operator()(const ElementaryAbelian& e) const { return int_pow(e.p, e.k); }
    std::size_t operator()(const Product& p) const {
      std::size_t r = 1;
      for (const auto& f : p.factors) r = saturating_mul(r, f.order());
      return r;
    }
  };
  return std::visit(Visitor{}, kind);
}

void GroupSpec::validate() const {
  struct Visitor {
    void operator()(const Cyclic& c) const {
      if (c.n < 1) throw GroupError("cyclic group needs n >= 1");
    }
    void operator()(const Dihedral& d) const {
      if (d.n < 3) throw GroupError("dihedral group D_2n needs n >= 3");
    }
    void operator()(const GeneralizedQuaternion& q) const {
      if (q.n < 2) throw GroupError("generalized quaternion group Q_4n needs n >= 2");
    }
    void operator()(const Semidihedral& s) const {
      if (s.n < 2) throw GroupError("semidihedral group SD_8n needs n >= 2");
    }
    void operator()(const ElementaryAbelian& e) const {
      if (!is_prime(e.p)) throw GroupError("elementary abelian group needs a prime p");
      if (e.k < 1) throw GroupError("elementary abelian group needs k >= 1");
    }
    void operator()(const Product& p) const {
      if (p.factors.empty()) throw GroupError("product needs at least one factor");
      for (const auto& f : p.factors) f.validate();
    }
  };
  std::visit(Visitor{}, kind);
}

bool GroupSpec::operator==(const GroupSpec& other) const { return to_string(*this) == to_string(other); }

GroupSpec parse_group_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string to_string(const GroupSpec& spec) {
  struct Visitor {
    std::string operator()(const GroupSpec::Cyclic& c) const {
      return "cyclic:" + std::to_string(c.n);
    }
    std::string operator()(const GroupSpec::Dihedral& d) const {
      return "dihedral:" + std::to_string(d.n);
    }
    std::string operator()(const GroupSpec::GeneralizedQuaternion& q) const {
      return "quaternion:" + std::to_string(q.n);
    }
    std::string operator()(const GroupSpec::Semidihedral& s) const {
      return "semidihedral:" + std::to_string(s.n);
    }
    std::string operator()(const GroupSpec::ElementaryAbelian& e) const {
      return "elemabelian:" + std::to_string(e.p) + "^" + std::to_string(e.k);
    }
    std::string operator()(const GroupSpec::Product& p) const {
      std::string s = "product(";
      for (std::size_t i = 0; i < p.factors.size(); ++i) {
        if (i > 0) s += ",";
        s += to_string(p.factors[i]);
      }
      return s + ")";
    }
  };
  return std::visit(Visitor{}, spec.kind);
}

GroupTable::GroupTable(std::size_t order, std::vector<Element> table, Element identity,
                       std::vector<std::string> labels)
    : order_(order),
      table_(std::move(table)),
      identity_(identity),
      inverse_(order, 0),
      labels_(std::move(labels)) {
  const std::size_t n = order_;
  if (n == 0) throw GroupError("group order must be positive");
  if (table_.size() != n * n) throw GroupError("table size does not match order");
  if (labels_.size() != n) throw GroupError("label count does not match order");
  if (identity_ >= n) throw GroupError("identity index out of range");

  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      const Element v = table_[i * n + j];
      if (v >= n || seen[v]) throw GroupError("table row is not a permutation");
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      const Element v = table_[j * n + i];
      if (v >= n || seen[v]) throw GroupError("table column is not a permutation");
      seen[v] = 1;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (mul(identity_, static_cast<Element>(i)) != i || mul(static_cast<Element>(i), identity_) != i)
      throw GroupError("identity does not act trivially");
  }
  for (Element x = 0; x < n; ++x) {
    bool found = false;
    for (Element y = 0; y < n && !found; ++y) {
      if (mul(x, y) == identity_ && mul(y, x) == identity_) {
        inverse_[x] = y;
        found = true;
      }
    }
    if (!found) throw GroupError("element without two-sided inverse");
  }
  if (n <= 128) {
    for (Element i = 0; i < n; ++i)
      for (Element j = 0; j < n; ++j)
        for (Element k = 0; k < n; ++k)
          if (mul(mul(i, j), k) != mul(i, mul(j, k))) throw GroupError("table is not associative");
  }
}

Element GroupTable::find(std::string_view label) const {
  for (Element x = 0; x < order_; ++x)
    if (labels_[x] == label) return x;
  throw GroupError("no element labelled '" + std::string(label) + "'");
}

Subgroup::Subgroup(const GroupTable& parent, std::vector<Element> members)
    : parent_(&parent), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Subgroup::contains(Element x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

GroupTable make_group(const GroupSpec& spec, std::size_t max_order) {
  spec.validate();
  const std::size_t order = spec.order();
  if (order > max_order) {
    throw OrderCapError(to_string(spec) + " has order " + std::to_string(order) +
                        ", above the cap of " + std::to_string(max_order));
  }
  struct Visitor {
    std::size_t cap;
    GroupTable operator()(const GroupSpec::Cyclic& c) const { return make_cyclic(c.n); }
    GroupTable operator()(const GroupSpec::Dihedral& d) const {
      const std::size_t m = d.n;
      return metacyclic(m, [m](std::size_t k) { return (m - k) % m; }, 0);
    }
    GroupTable operator()(const GroupSpec::GeneralizedQuaternion& q) const {
      const std::size_t m = 2 * q.n;
      return metacyclic(m, [m](std::size_t k) { return (m - k) % m; }, q.n);
    }
    GroupTable operator()(const GroupSpec::Semidihedral& s) const {
      const std::size_t m = 4 * s.n;
      const std::size_t r = 2 * s.n - 1;
      return metacyclic(m, [m, r](std::size_t k) { return (r * k) % m; }, 0);
    }
    GroupTable operator()(const GroupSpec::ElementaryAbelian& e) const {
      return make_elementary_abelian(e.p, e.k);
    }
    GroupTable operator()(const GroupSpec::Product& p) const {
      // Build right-to-left so that labels come out as flat tuples.
      std::vector<GroupTable> tables;
      tables.reserve(p.factors.size());
      for (const auto& f : p.factors) tables.push_back(make_group(f, cap));
      if (tables.size() == 1) return std::move(tables.front());
      std::size_t n = 1;
      for (const auto& t : tables) n *= t.order();
      const std::size_t r = tables.size();
      std::vector<Element> table(n * n);
      std::vector<std::size_t> xs(r), ys(r);
      auto decompose = [&](std::size_t v, std::vector<std::size_t>& out) {
        for (std::size_t f = r; f-- > 0;) {
          out[f] = v % tables[f].order();
          v /= tables[f].order();
        }
      };
      for (std::size_t x = 0; x < n; ++x) {
        decompose(x, xs);
        for (std::size_t y = 0; y < n; ++y) {
          decompose(y, ys);
          std::size_t z = 0;
          for (std::size_t f = 0; f < r; ++f) {
            z = z * tables[f].order() +
                tables[f].mul(static_cast<Element>(xs[f]), static_cast<Element>(ys[f]));
          }
          table[x * n + y] = static_cast<Element>(z);
        }
      }
      std::size_t identity = 0;
      for (std::size_t f = 0; f < r; ++f) identity = identity * tables[f].order() + tables[f].identity();
      std::vector<std::string> labels(n);
      for (std::size_t x = 0; x < n; ++x) {
        decompose(x, xs);
        std::string s = "(";
        for (std::size_t f = 0; f < r; ++f) {
          if (f > 0) s += ", ";
          s += tables[f].label(static_cast<Element>(xs[f]));
        }
        labels[x] = s + ")";
      }
      return GroupTable(n, std::move(table), static_cast<Element>(identity), std::move(labels));
    }
  };
  return std::visit(Visitor{max_order}, spec.kind);
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h, std::size_t max_order) {
  const std::size_t n = saturating_mul(g.order(), h.order());
  if (n > max_order) {
    throw OrderCapError("direct product has order " + std::to_string(n) + ", above the cap of " +
                        std::to_string(max_order));
  }
  const std::size_t m = h.order();
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Element a = g.mul(static_cast<Element>(x / m), static_cast<Element>(y / m));
      const Element b = h.mul(static_cast<Element>(x % m), static_cast<Element>(y % m));
      table[x * n + y] = static_cast<Element>(a * m + b);
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    labels[x] = "(" + g.label(static_cast<Element>(x / m)) + ", " +
                h.label(static_cast<Element>(x % m)) + ")";
  }
  const Element identity = static_cast<Element>(g.identity() * m + h.identity());
  return GroupTable(n, std::move(table), identity, std::move(labels));
}

std::size_t element_order(const GroupTable& g, Element x) {
  std::size_t k = 1;
  for (Element y = x; y != g.identity(); y = g.mul(y, x)) ++k;
  return k;
}

Subgroup cyclic_subgroup(const GroupTable& g, Element x) {
  std::vector<Element> members{g.identity()};
  for (Element y = x; y != g.identity(); y = g.mul(y, x)) members.push_back(y);
  return Subgroup(g, std::move(members));
}

std::vector<Subgroup> maximal_cyclic_subgroups(const GroupTable& g) {
  std::vector<Subgroup> cyclics;
  for (Element x = 0; x < g.order(); ++x) cyclics.push_back(cyclic_subgroup(g, x));
  std::sort(cyclics.begin(), cyclics.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  cyclics.erase(std::unique(cyclics.begin(), cyclics.end()), cyclics.end());

  std::vector<Subgroup> maximal;
  for (const auto& c : cyclics) {
    const bool contained = std::any_of(maximal.begin(), maximal.end(), [&](const Subgroup& m) {
      return std::includes(m.members().begin(), m.members().end(), c.members().begin(),
                           c.members().end());
    });
    if (!contained) maximal.push_back(c);
  }
  return maximal;
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<Element> out;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(out));
  return Subgroup(a.parent(), std::move(out));
}

Subgroup tau(const GroupTable& g) {
  const auto maximal = maximal_cyclic_subgroups(g);
  Subgroup t = maximal.front();
  for (const auto& m : maximal) t = intersection(t, m);
  return t;
}

Subgroup center(const GroupTable& g) {
  std::vector<Element> z;
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) z.push_back(x);
  }
  return Subgroup(g, std::move(z));
}

bool is_nilpotent(const GroupTable& g) {
  std::vector<std::size_t> orders(g.order());
  for (Element x = 0; x < g.order(); ++x) orders[x] = element_order(g, x);
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = x + 1; y < g.order(); ++y) {
      if (std::gcd(orders[x], orders[y]) == 1 && g.mul(x, y) != g.mul(y, x)) return false;
    }
  }
  return true;
}

bool is_abelian(const GroupTable& g) { return center(g).size() == g.order(); }

bool is_cyclic(const GroupTable& g) {
  for (Element x = 0; x < g.order(); ++x)
    if (element_order(g, x) == g.order()) return true;
  return false;
}

std::size_t exponent(const GroupTable& g) {
  std::size_t e = 1;
  for (Element x = 0; x < g.order(); ++x) e = std::lcm(e, element_order(g, x));
  return e;
}

std::size_t totient(std::size_t n) {
  std::size_t count = 0;
  for (std::size_t k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> primes;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      primes.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

std::size_t prime_power_base(std::size_t n) {
  const auto primes = prime_factors(n);
  return primes.size() == 1 ? primes.front() : 0;
}

}  // namespace grouplines
