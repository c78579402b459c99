#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fusion/config.hpp"
#include "fusion/group.hpp"

namespace fusion {

// Most operations take the ambient "group" as a Subgroup so that they apply
// equally to a whole group and to local subgroups such as N_G(P).

Subgroup generate_subgroup(const GroupPtr& group, std::span<const Elem> gens);
/// <base, extra>.
Subgroup extend_subgroup(const Subgroup& base, std::span<const Elem> extra);
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
/// g S g^-1.
Subgroup conjugate(Elem g, const Subgroup& s);

/// A short generating sequence chosen greedily (largest element order first,
/// ties by index). Each element lies outside the span of its predecessors.
std::vector<Elem> generating_set(const Subgroup& s);

/// C_H(S) and N_H(S). S need not lie in H but must share its parent.
Subgroup centralizer(const Subgroup& h, const Subgroup& s);
Subgroup normalizer(const Subgroup& h, const Subgroup& s);
Subgroup centralizer(const GroupPtr& g, const Subgroup& s);
Subgroup normalizer(const GroupPtr& g, const Subgroup& s);
Subgroup center(const Subgroup& h);

bool is_normal_in(const Subgroup& h, const Subgroup& n);
bool is_abelian(const Subgroup& h);
bool is_p_group(const Subgroup& h, std::size_t p);
/// [A, B] = <a^-1 b^-1 a b>.
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);
/// Smallest normal subgroup of H containing `gens`.
Subgroup normal_closure(const Subgroup& h, std::span<const Elem> gens);

/// Conjugacy classes of H, each sorted, listed by smallest member.
std::vector<std::vector<Elem>> conjugacy_classes(const Subgroup& h);

/// Deterministic Sylow p-subgroup: grows from 1 by the first element of the
/// normalizer whose coset has order p. Trivial when p does not divide |H|.
Subgroup sylow_subgroup(const Subgroup& h, std::size_t p);
Subgroup sylow_subgroup(const GroupPtr& g, std::size_t p);
std::vector<Subgroup> all_sylow_subgroups(const Subgroup& h, std::size_t p);
bool is_sylow(const Subgroup& h, const Subgroup& p_sub, std::size_t p);

/// Every subgroup of H exactly once, sorted by (order, members).
/// Throws SubgroupCapExceeded when |H| > cap.
std::vector<Subgroup> all_subgroups(const Subgroup& h, std::size_t cap = caps().lattice_order);
std::vector<Subgroup> normal_subgroups(const Subgroup& h, std::size_t cap = caps().lattice_order);

enum class CharacteristicKind { derived, frattini, center, o_p, o_p_prime, p_residue, thompson_j, omega_1 };

std::string_view to_string(CharacteristicKind kind);
std::optional<CharacteristicKind> characteristic_kind_from_string(std::string_view name);

/// Throws MissingPrime when `kind` needs p and none is given.
Subgroup characteristic_subgroup(const Subgroup& h, CharacteristicKind kind,
                                 std::optional<std::size_t> p = std::nullopt);
Subgroup characteristic_subgroup(const GroupPtr& g, CharacteristicKind kind,
                                 std::optional<std::size_t> p = std::nullopt);

/// H/N realized on the left cosets of N, with the projection recorded for
/// every element of H.
struct Quotient {
  static constexpr Elem kOutside = std::numeric_limits<Elem>::max();

  GroupPtr group;
  /// Indexed by elements of H's parent; kOutside off H.
  std::vector<Elem> projection;

  Elem project(Elem x) const { return projection[x]; }
  /// Image of a subgroup of H.
  Subgroup project(const Subgroup& s) const;
  /// Full preimage of a subgroup of the quotient, as a subgroup of H's parent.
  Subgroup preimage(const Subgroup& sbar, const Subgroup& h) const;
};

/// Throws NotNormal unless N is a normal subgroup of H.
Quotient quotient_group(const Subgroup& h, const Subgroup& n);

enum class FusionVerdict { conjugate_in_H, fused, not_conjugate };
std::string_view to_string(FusionVerdict v);

/// Throws ElementOutsideH unless x, y are in H; H must lie in G.
FusionVerdict are_fused(const Subgroup& h, const Subgroup& g, Elem x, Elem y);

/// Copy of S as a group in its own right. Element i of the result is
/// members()[i] of S (both lists are sorted by image sequence).
GroupPtr as_group(const Subgroup& s, std::string label = {});

/// An isomorphism A -> B as images aligned with A.members(), if any.
/// Generator-image backtracking with an element-order census up front.
std::optional<std::vector<Elem>> find_isomorphism(const Subgroup& a, const Subgroup& b);
bool are_isomorphic(const Subgroup& a, const Subgroup& b);

/// True iff some K/N with N normal in K <= G is isomorphic to H.
bool has_section_isomorphic(const Subgroup& g, const Subgroup& h);
bool has_section_isomorphic(const GroupPtr& g, const GroupPtr& h);

/// Sorted multiset of element orders.
std::vector<std::size_t> order_census(const Subgroup& s);

}  // namespace fusion
