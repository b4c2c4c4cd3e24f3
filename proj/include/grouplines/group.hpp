#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace grouplines {

using Element = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 512;

// Raised for malformed group specs and out-of-range family parameters.
class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a construction would exceed the configured order cap.
class OrderCapError : public GroupError {
 public:
  using GroupError::GroupError;
};

/*
 * GroupSpec: a constructor description for the families used throughout
 * the library.
 *
 *   Cyclic(n)                 Z_n,   n >= 1
 *   Dihedral(n)               D_2n,  n >= 3   a^n = b^2 = e, ab = ba^-1
 *   GeneralizedQuaternion(n)  Q_4n,  n >= 2   a^2n = e, a^n = b^2, ab = ba^-1
 *   Semidihedral(n)           SD_8n, n >= 2   a^4n = b^2 = e, ba = a^(2n-1) b
 *   ElementaryAbelian(p, k)   Z_p^k, p prime, k >= 1
 *   Product(factors)          direct product, first factor most significant
 */
struct GroupSpec {
  struct Cyclic {
    std::size_t n;
  };
  struct Dihedral {
    std::size_t n;
  };
  struct GeneralizedQuaternion {
    std::size_t n;
  };
  struct Semidihedral {
    std::size_t n;
  };
  struct ElementaryAbelian {
    std::size_t p;
    std::size_t k;
  };
  struct Product {
    std::vector<GroupSpec> factors;
  };

  std::variant<Cyclic, Dihedral, GeneralizedQuaternion, Semidihedral, ElementaryAbelian,
               Product>
      kind;

  static GroupSpec cyclic(std::size_t n) { return {Cyclic{n}}; }
  static GroupSpec dihedral(std::size_t n) { return {Dihedral{n}}; }
  static GroupSpec quaternion(std::size_t n) { return {GeneralizedQuaternion{n}}; }
  static GroupSpec semidihedral(std::size_t n) { return {Semidihedral{n}}; }
  static GroupSpec elementary_abelian(std::size_t p, std::size_t k) {
    return {ElementaryAbelian{p, k}};
  }
  static GroupSpec product(std::vector<GroupSpec> factors) {
    return {Product{std::move(factors)}};
  }

  // Order of the group this spec describes, saturating at SIZE_MAX.
  std::size_t order() const;

  // Throws GroupError if any parameter is below its family's minimum.
  void validate() const;

  bool operator==(const GroupSpec&) const;
};

// Grammar: cyclic:6 | dihedral:6 | quaternion:4 | semidihedral:2 |
// elemabelian:3^2 | product(<spec>,<spec>,...). Case-insensitive, no spaces.
GroupSpec parse_group_spec(std::string_view text);
std::string to_string(const GroupSpec& spec);

// A finite group as an explicit Cayley table. Immutable once built.
class GroupTable {
 public:
  // Validates the Latin-square, identity and inverse invariants, and
  // associativity when order <= 128. Throws GroupError on failure.
  GroupTable(std::size_t order, std::vector<Element> table, Element identity,
             std::vector<std::string> labels);

  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }
  Element mul(Element x, Element y) const { return table_[x * order_ + y]; }
  Element inverse(Element x) const { return inverse_[x]; }
  const std::string& label(Element x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Index of the element with the given label, or throws GroupError.
  Element find(std::string_view label) const;

 private:
  std::size_t order_;
  std::vector<Element> table_;
  Element identity_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
};

// A subgroup as a sorted set of element indices of a parent table. The parent
// must outlive the subgroup.
class Subgroup {
 public:
  Subgroup(const GroupTable& parent, std::vector<Element> members);

  const GroupTable& parent() const { return *parent_; }
  std::span<const Element> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Element x) const;

  bool operator==(const Subgroup& other) const {
    return parent_ == other.parent_ && members_ == other.members_;
  }
  auto operator<=>(const Subgroup& other) const { return members_ <=> other.members_; }

 private:
  const GroupTable* parent_;
  std::vector<Element> members_;
};

GroupTable make_group(const GroupSpec& spec, std::size_t max_order = kDefaultOrderCap);
GroupTable direct_product(const GroupTable& g, const GroupTable& h,
                          std::size_t max_order = kDefaultOrderCap);

std::size_t element_order(const GroupTable& g, Element x);
Subgroup cyclic_subgroup(const GroupTable& g, Element x);

// All maximal cyclic subgroups, sorted by (size descending, members).
std::vector<Subgroup> maximal_cyclic_subgroups(const GroupTable& g);

// Intersection of all maximal cyclic subgroups.
Subgroup tau(const GroupTable& g);
Subgroup center(const GroupTable& g);
Subgroup intersection(const Subgroup& a, const Subgroup& b);

bool is_nilpotent(const GroupTable& g);
bool is_abelian(const GroupTable& g);
bool is_cyclic(const GroupTable& g);
std::size_t exponent(const GroupTable& g);

// Number theory on small integers.
std::size_t totient(std::size_t n);
bool is_prime(std::size_t n);
// Returns the prime p with n = p^k (k >= 1), or 0 if n is not a prime power.
std::size_t prime_power_base(std::size_t n);
std::vector<std::size_t> prime_factors(std::size_t n);

}  // namespace grouplines
