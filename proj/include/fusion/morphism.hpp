#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "fusion/group.hpp"
#include "fusion/subgroups.hpp"

namespace fusion {

/// Injective homomorphism between subgroups, stored as the full image table
/// aligned with domain().members(). Domain and codomain may live in
/// different groups.
class GroupMorphism {
 public:
  GroupMorphism() = default;

  /// Trusted constructor.
  GroupMorphism(Subgroup domain, Subgroup codomain, std::vector<Elem> images);

  /// Exhaustively checks the homomorphism law, injectivity and that the image
  /// lies in the codomain. Throws InvalidInput.
  static GroupMorphism checked(Subgroup domain, Subgroup codomain, std::vector<Elem> images);
  static GroupMorphism from_pairs(Subgroup domain, Subgroup codomain,
                                  const std::vector<std::pair<Elem, Elem>>& pairs);
  /// Extends generator images multiplicatively, then runs checked(). The
  /// sources must generate the domain. Throws InvalidInput.
  static GroupMorphism from_generator_images(Subgroup domain, Subgroup codomain,
                                             const std::vector<std::pair<Elem, Elem>>& pairs);
  static GroupMorphism identity(const Subgroup& s);

  const Subgroup& domain() const { return domain_; }
  const Subgroup& codomain() const { return codomain_; }
  const std::vector<Elem>& images() const { return images_; }

  /// Image of x; x must lie in the domain.
  Elem operator()(Elem x) const;
  Subgroup image(const Subgroup& s) const;
  Subgroup image() const;

  bool is_identity() const;
  bool is_automorphism() const;
  bool is_isomorphism() const { return image() == codomain_; }

  GroupMorphism restrict_to(const Subgroup& s) const;
  /// Same map into a smaller (or larger) codomain containing the image.
  GroupMorphism corestrict(const Subgroup& t) const;
  /// The inverse of the corestriction onto the image.
  GroupMorphism inverse() const;

  friend bool operator==(const GroupMorphism& a, const GroupMorphism& b);
  friend std::strong_ordering operator<=>(const GroupMorphism& a, const GroupMorphism& b);

 private:
  Subgroup domain_;
  Subgroup codomain_;
  std::vector<Elem> images_;
};

/// outer after inner. Throws ImageNotContained unless inner's image lies in
/// outer's domain.
GroupMorphism compose(const GroupMorphism& outer, const GroupMorphism& inner);

/// s -> g s g^-1 from S to T. Throws ImageNotContained unless gSg^-1 <= T.
GroupMorphism hom_from_conjugation(Elem g, const Subgroup& s, const Subgroup& t);

/// Distinct restrictions of conjugations by P that carry S into T, sorted.
std::vector<GroupMorphism> hom_P(const Subgroup& p, const Subgroup& s, const Subgroup& t);

/// Every injective homomorphism S -> T, sorted. Throws MapCapExceeded when
/// |S| exceeds caps().map_domain.
std::vector<GroupMorphism> all_injective_homs(const Subgroup& s, const Subgroup& t);

/// Aut(Q) as a sorted list.
std::vector<GroupMorphism> automorphisms(const Subgroup& q);

/// Automorphisms of Q acting on the positions 0..|Q|-1 of Q's member list.
struct RealizedAutGroup {
  Subgroup base;
  GroupPtr carrier;
  /// tagging[e] is the automorphism carried by carrier element e.
  std::vector<GroupMorphism> tagging;
  /// Image of Inn(Q).
  Subgroup inner;

  Elem element_of(const GroupMorphism& aut) const;
  std::vector<Elem> elements_of(const std::vector<GroupMorphism>& auts) const;
  /// Out = carrier / inner.
  Quotient out() const;
};

/// Closes `auts` together with Inn(Q) under composition and realizes the
/// result. Throws NotAutomorphism on a map that is not an automorphism of Q.
RealizedAutGroup realize_aut_group(const Subgroup& q, const std::vector<GroupMorphism>& auts);

/// A permutation phihat of H's element indices with
/// phihat * sigma_x * phihat^-1 = sigma_phi(x) for every x in the domain,
/// where sigma is the left regular representation. Throws NotIsomorphism
/// unless phi is an isomorphism between subgroups of H.
Permutation regular_embedding_conjugator(const GroupPtr& h, const GroupMorphism& phi);

/// Left regular representation sigma_x(h) = x h on H's element indices.
Permutation left_regular(const GroupPtr& h, Elem x);

}  // namespace fusion
