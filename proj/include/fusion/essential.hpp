#pragma once

#include <map>
#include <optional>
#include <vector>

#include "fusion/fusion_system.hpp"
#include "fusion/morphism.hpp"

namespace fusion {

struct StronglyEmbeddedResult {
  bool found = false;
  /// A strongly p-embedded subgroup, when the direct search ran and found one.
  std::optional<Subgroup> witness;
  bool direct_search_ran = false;
};

/// Primary answer from the Sylow intersection graph (disconnected iff a
/// strongly p-embedded subgroup exists); confirmed by a search over all
/// proper subgroups when |L| <= caps().direct_embedding. Throws
/// MethodDisagreement if the two differ.
StronglyEmbeddedResult has_strongly_p_embedded(const Subgroup& l, std::size_t prime);

struct EssentialClass {
  /// F-normalized representative (lattice index and subgroup).
  std::size_t representative = 0;
  Subgroup subgroup;
  /// Lattice indices of the whole F-conjugacy class.
  std::vector<std::size_t> members;
  std::size_t out_order = 0;
};

struct EssentialReport {
  std::vector<EssentialClass> classes;
  std::size_t rank = 0;
};

/// Essential subgroups, one class per entry. Throws NotSaturated.
EssentialReport essential_subgroups(const FusionSystem& f);

/// Essentiality of Q; a non-normalized Q answers for the representative of its class.
bool is_essential(const FusionSystem& f, const Subgroup& q);

/// O_p(Aut_F(Q)) = Inn(Q).
bool is_radical(const FusionSystem& f, const Subgroup& q);

struct FactorStep {
  /// P or an essential representative.
  Subgroup q;
  /// Automorphism of q; a p-element when q is essential.
  GroupMorphism aut;
  /// The subgroup the step is restricted to.
  Subgroup domain;
};

struct FactorizationWitness {
  GroupMorphism target;
  std::vector<FactorStep> steps;
};

/// Composes the restricted steps in order.
GroupMorphism recompose(const FactorizationWitness& w);

/// Shortest factorization of isomorphisms in F through automorphisms of P
/// and p-element automorphisms of the essential representatives. Searches
/// are cached per domain, so reuse one instance for many queries.
class AlperinFactorizer {
 public:
  /// Throws NotSaturated.
  explicit AlperinFactorizer(const FusionSystem& f);

  const EssentialReport& essentials() const { return report_; }

  /// Throws NotIsoInF if phi is not an isomorphism in F, NoFactorization
  /// if none is found (impossible on saturated input).
  FactorizationWitness factorize(const GroupMorphism& phi);

 private:
  struct Mover {
    std::size_t q;  // lattice index
    std::vector<std::vector<Elem>> auts;  // tables aligned with q's members
  };
  struct Tree {
    // Reached maps out of the domain, with the parent map and move used.
    std::map<std::vector<Elem>, std::tuple<std::vector<Elem>, std::size_t, std::size_t>> parent;
  };

  const Tree& tree_for(std::size_t domain);

  const FusionSystem& f_;
  EssentialReport report_;
  std::vector<Mover> movers_;
  std::map<std::size_t, Tree> trees_;
};

FactorizationWitness alperin_factorize(const FusionSystem& f, const GroupMorphism& phi);

struct ControlFlags {
  bool trivial = false;
  bool controlled = false;
  bool constrained = false;
  bool none() const { return !trivial && !controlled && !constrained; }
};

/// Trivial (F = F_P(P)), controlled (no essentials), constrained. F must be saturated.
ControlFlags classify_control(const FusionSystem& f);

}  // namespace fusion
