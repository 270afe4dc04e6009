#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace xxz {

class FiniteGroup;

/// Groups are shared immutable values; element identity is (group, index).
using Group = std::shared_ptr<const FiniteGroup>;

/// Hard cap on group order (the Cayley table is dense, memory is order^2).
inline constexpr int kMaxGroupOrder = 1 << 20;

/// How a group was constructed; kept so specs serialize compactly.
struct GroupDesc {
  enum class Kind { cyclic, torus, product, table };
  Kind kind = Kind::table;
  std::vector<int> dims;  // cyclic: {n}; torus: {l,m,n}
};

/// A finite group as a validated Cayley table with identity and inverse
/// tables. mul(a, b) is the product "a then b" in juxtaposition order, so
/// for permutation groups built by the helpers, a*b means "apply b, then a".
class FiniteGroup {
 public:
  int order() const { return order_; }
  int identity() const { return identity_; }
  bool is_abelian() const { return abelian_; }

  int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * order_ + b]; }
  int inv(int a) const { return inv_[a]; }

  const std::string& name(int a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> find(std::string_view name) const;

  const GroupDesc& desc() const { return desc_; }

  /// Order of the cyclic subgroup generated by a.
  int element_order(int a) const;

 private:
  FiniteGroup() = default;
  friend Group make_cyclic(int n);
  friend Group make_torus(int l, int m, int n);
  friend Group direct_product(const Group& g1, const Group& g2);
  friend Group from_cayley_table(std::vector<std::vector<int>> table,
                                 std::vector<std::string> names);

  static Group build(std::vector<int> mul, std::vector<std::string> names,
                     GroupDesc desc);

  int order_ = 0;
  int identity_ = 0;
  bool abelian_ = true;
  std::vector<int> mul_;  // order x order, row-major
  std::vector<int> inv_;
  std::vector<std::string> names_;
  GroupDesc desc_;
};

/// Z_n under addition; element i is named "g^i".
Group make_cyclic(int n);

/// Z_l x Z_m x Z_n with the unit vectors named "x", "y", "z" and the
/// identity named "1"; general elements read like "x2yz".
Group make_torus(int l, int m, int n);

/// Componentwise product; element (a, b) sits at index a*|G2| + b.
Group direct_product(const Group& g1, const Group& g2);

/// Validates all group axioms (Latin square, identity, inverses,
/// associativity) and derives the identity/inverse tables. Associativity is
/// checked exhaustively up to order 64 and on random triples above that.
/// Throws validation_error naming the failure (with a witness triple for
/// non-associativity).
Group from_cayley_table(std::vector<std::vector<int>> table,
                        std::vector<std::string> names = {});

/// Plain-text Cayley table: first line the order n, then n lines of n
/// indices; an optional line "#names: a b c ..." supplies element names.
Group load_cayley_file(const std::string& path);

/// Resolve an element token: exact name, "-name" for the inverse, "1"/"e"
/// for the identity when unclaimed, or a decimal index. Throws
/// validation_error for unknown tokens.
int resolve_element(const FiniteGroup& g, std::string_view token);

struct GroupElement {
  Group group;
  int index = 0;
  bool operator==(const GroupElement& o) const {
    return group.get() == o.group.get() && index == o.index;
  }
};

/// Table-lookup product; rejects elements of different groups.
GroupElement group_mul(const GroupElement& a, const GroupElement& b);
GroupElement group_inv(const GroupElement& a);

}  // namespace xxz
