#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "fusion/permutation.hpp"

namespace fusion {

/// Index of an element in its group's canonical element list.
using Elem = std::uint32_t;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A permutation group with its full element list enumerated.
///
/// Elements are sorted lexicographically by image sequence, so the identity
/// always has index 0 and every "first found" choice elsewhere in the library
/// is deterministic. Products are function composition: mul(a, b) applies b
/// first.
class FiniteGroup {
 public:
  /// Enumerates <gens> by closure. Throws OrderCapExceeded past caps().group_order
  /// and MalformedPermutation on a degree mismatch.
  static GroupPtr generate(std::size_t degree, std::vector<Permutation> gens,
                           std::string label = {});

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::string& label() const { return label_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  /// Indices of the generators (duplicates and identities removed).
  const std::vector<Elem>& generator_elements() const { return generator_elements_; }

  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(Elem e) const { return elements_[e]; }
  std::optional<Elem> index_of(const Permutation& p) const;

  static constexpr Elem identity() { return 0; }
  Elem mul(Elem a, Elem b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elements_.size() + b];
    return mul_slow(a, b);
  }
  Elem inv(Elem a) const { return inverses_[a]; }
  /// g x g^-1.
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inverses_[g]); }
  /// x^-1 y^-1 x y.
  Elem commutator(Elem x, Elem y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }
  Elem power(Elem a, long long n) const;
  std::size_t element_order(Elem a) const { return orders_[a]; }

 private:
  FiniteGroup() = default;
  Elem mul_slow(Elem a, Elem b) const;

  std::size_t degree_ = 0;
  std::string label_;
  std::vector<Permutation> generators_;
  std::vector<Elem> generator_elements_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, Elem, PermutationHash> lookup_;
  std::vector<std::uint16_t> table_;
  std::vector<Elem> inverses_;
  std::vector<std::size_t> orders_;
};

/// Same object, or same degree and identical element lists.
bool same_group(const GroupPtr& a, const GroupPtr& b);

/// A subset of a parent group closed under products and inverses.
/// Members are kept sorted, which fixes the canonical order of subgroups:
/// by order first, then by member list.
class Subgroup {
 public:
  Subgroup() = default;

  /// Trusts that `members` is closed; use checked() for untrusted input.
  Subgroup(GroupPtr parent, std::vector<Elem> members);

  /// Verifies closure; throws InvalidInput otherwise.
  static Subgroup checked(GroupPtr parent, std::vector<Elem> members);
  static Subgroup whole(const GroupPtr& parent);
  static Subgroup trivial(const GroupPtr& parent);

  const GroupPtr& parent() const { return parent_; }
  const FiniteGroup& group() const { return *parent_; }
  std::span<const Elem> members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool is_trivial() const { return members_.size() == 1; }

  bool contains(Elem e) const { return (mask_[e >> 6] >> (e & 63)) & 1u; }
  bool contains(const Subgroup& other) const;
  /// Position of `e` within members(), if present.
  std::optional<std::size_t> position(Elem e) const;

  const std::vector<std::uint64_t>& mask() const { return mask_; }

  friend bool operator==(const Subgroup& a, const Subgroup& b);
  friend std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b);

 private:
  GroupPtr parent_;
  std::vector<Elem> members_;
  std::vector<std::uint64_t> mask_;
};

struct SubgroupHash {
  std::size_t operator()(const Subgroup& s) const noexcept;
};

/// Throws ForeignSubgroup unless both live in the same group.
void require_same_parent(const Subgroup& a, const Subgroup& b, const char* context);

}  // namespace fusion
