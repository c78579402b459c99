#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fusion/group.hpp"
#include "fusion/morphism.hpp"

namespace fusion {

/// All subgroups of a p-group P, in canonical order, with the P-local data
/// every fusion-system computation needs.
class SubgroupLattice {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit SubgroupLattice(const Subgroup& p);

  const Subgroup& top() const { return subs_.back(); }
  std::size_t top_index() const { return subs_.size() - 1; }
  std::size_t size() const { return subs_.size(); }
  const Subgroup& operator[](std::size_t i) const { return subs_[i]; }
  const std::vector<Subgroup>& subgroups() const { return subs_; }

  std::optional<std::size_t> find(const Subgroup& s) const;
  /// Index of a subgroup given its sorted member list.
  std::optional<std::size_t> find_members(const std::vector<Elem>& sorted) const;
  /// Throws ForeignSubgroup when S is not a subgroup of P.
  std::size_t index_of(const Subgroup& s) const;

  /// Position of an ambient element inside P's member list, or npos.
  std::size_t local(Elem e) const { return e < local_.size() ? local_[e] : npos; }

  std::size_t normalizer(std::size_t i) const { return normalizer_[i]; }
  std::size_t centralizer(std::size_t i) const { return centralizer_[i]; }
  /// Indices of subgroups contained in subgroup i (including i itself).
  const std::vector<std::size_t>& below(std::size_t i) const { return below_[i]; }
  bool is_normal_in_top(std::size_t i) const { return normalizer_[i] == top_index(); }

 private:
  struct VecHash {
    std::size_t operator()(const std::vector<Elem>& v) const noexcept;
  };
  std::vector<Subgroup> subs_;
  std::unordered_map<std::vector<Elem>, std::size_t, VecHash> index_;
  std::vector<std::size_t> local_;
  std::vector<std::size_t> normalizer_;
  std::vector<std::size_t> centralizer_;
  std::vector<std::vector<std::size_t>> below_;
};

using LatticePtr = std::shared_ptr<const SubgroupLattice>;

enum class ProvenanceKind { from_group, universal, generated, derived_local };
std::string_view to_string(ProvenanceKind k);

struct Provenance {
  ProvenanceKind kind = ProvenanceKind::generated;
  std::string description;
  /// The realizing group for from_group systems.
  std::optional<Subgroup> group;
  /// P is Sylow in `group`.
  bool sylow = false;
  /// Free-form records such as representative substitutions.
  std::vector<std::string> notes;
};

/// A fusion system on P. For every subgroup S (by lattice index) the set
/// Hom_F(S, P) is stored as sorted image tables aligned with S's members;
/// Hom_F(S, T) is the part with image inside T.
class FusionSystem {
 public:
  using Table = std::vector<Elem>;

  FusionSystem(std::size_t p, LatticePtr lattice, std::vector<std::vector<Table>> maps,
               Provenance provenance);

  std::size_t prime() const { return p_; }
  const Subgroup& p_group() const { return lattice_->top(); }
  const SubgroupLattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  const Provenance& provenance() const { return provenance_; }
  Provenance& provenance() { return provenance_; }

  const std::vector<Table>& maps_from(std::size_t i) const { return maps_[i]; }
  /// Lattice index of the image of the k-th map from subgroup i.
  std::size_t image_index(std::size_t i, std::size_t k) const { return image_[i][k]; }
  bool contains_map(std::size_t i, const Table& t) const;
  /// True iff phi lies in F (domain and image inside P, table stored).
  bool contains(const GroupMorphism& phi) const;

  /// Hom_F(S, T). Throws ForeignSubgroup unless S, T <= P.
  std::vector<GroupMorphism> hom_set(const Subgroup& s, const Subgroup& t) const;
  /// Aut_F(S_i).
  std::vector<GroupMorphism> automorphisms(std::size_t i) const;
  /// Isomorphisms S_i -> S_j in F, as tables.
  std::vector<Table> isomorphisms(std::size_t i, std::size_t j) const;

  std::size_t morphism_count() const;
  /// Number of F-automorphisms of S_i.
  std::size_t aut_order(std::size_t i) const;

  GroupMorphism morphism(std::size_t i, std::size_t k) const;

 private:
  std::size_t p_;
  LatticePtr lattice_;
  std::vector<std::vector<Table>> maps_;
  std::vector<std::vector<std::size_t>> image_;
  Provenance provenance_;
};

/// F_P(G) for a p-subgroup P of G (G given as a subgroup of P's parent).
/// Throws NotPSubgroup.
FusionSystem fusion_system_of_group(const Subgroup& g, const Subgroup& p, std::size_t prime,
                                    LatticePtr lattice = nullptr);
FusionSystem fusion_system_of_group(const GroupPtr& g, const Subgroup& p, std::size_t prime);

/// U(P): every injective homomorphism. Throws MapCapExceeded.
FusionSystem universal_fusion_system(const Subgroup& p, std::size_t prime,
                                     LatticePtr lattice = nullptr);

/// Smallest fusion system on P containing the seed morphisms.
FusionSystem generated_fusion_system(const Subgroup& p, std::size_t prime,
                                     const std::vector<GroupMorphism>& seed,
                                     LatticePtr lattice = nullptr);

/// F_P(P).
FusionSystem trivial_fusion_system(const Subgroup& p, std::size_t prime, LatticePtr lattice = nullptr);

std::vector<GroupMorphism> hom_set(const FusionSystem& f, const Subgroup& s, const Subgroup& t);

struct FConjugacyPartition {
  /// Lattice indices per class, each sorted; classes ordered by first member.
  std::vector<std::vector<std::size_t>> subgroup_classes;
  std::vector<std::size_t> subgroup_class_of;
  /// Per class: the member with largest |N_P(S)|, ties to the canonical order.
  std::vector<std::size_t> representatives;
  /// Ambient elements of P per class, sorted; classes ordered by first member.
  std::vector<std::vector<Elem>> element_classes;
  /// Class of the i-th member of P.
  std::vector<std::size_t> element_class_of;
};

FConjugacyPartition f_conjugacy(const FusionSystem& f);

/// Carries F along an isomorphism alpha: P -> P' (P' possibly in another
/// group): Hom(alpha S, alpha T) = alpha Hom_F(S,T) alpha^-1.
FusionSystem transport(const FusionSystem& f, const GroupMorphism& alpha, LatticePtr target = nullptr);

/// Homset comparisons. Throw DifferentUnderlyingGroup unless both systems
/// live on the same P.
bool subsystem_equal(const FusionSystem& a, const FusionSystem& b);
bool subsystem_leq(const FusionSystem& a, const FusionSystem& b);

struct AxiomAudit {
  bool ok = true;
  std::string failure;
};

/// Exhaustive check: Hom_P in every homset, inverses, composition and
/// restriction closure.
AxiomAudit audit_axioms(const FusionSystem& f);

}  // namespace fusion
