#pragma once

#include <string>
#include <vector>

#include "fusion/essential.hpp"
#include "fusion/fusion_system.hpp"

namespace fusion {

struct Realization {
  std::string group;
  /// Isomorphism P -> Sylow p-subgroup of the registry group carrying this
  /// system onto F_S(G).
  GroupMorphism sylow_iso;
};

struct ClassifiedSystem {
  FusionSystem system;
  EssentialReport essentials;
  ControlFlags flags;
  /// |Out_F(P)|.
  std::size_t out_order = 0;
  std::vector<Realization> realizations;
};

struct ClassifierStats {
  std::size_t top_automizers = 0;
  std::size_t essential_candidates = 0;
  std::size_t essential_automizers = 0;
  std::size_t assignments = 0;
  std::size_t saturated = 0;
  std::size_t unsaturated = 0;
  std::size_t duplicates = 0;
  std::size_t registry_groups_checked = 0;
};

struct ClassificationResult {
  Subgroup p;
  std::size_t prime = 0;
  /// Sorted by (essential rank, |Out_F(P)|, morphism count).
  std::vector<ClassifiedSystem> systems;
  ClassifierStats stats;
};

/// Every saturated fusion system on P up to isomorphism induced by Aut(P).
/// Candidates are generated from an automizer of P (a p'-extension of
/// Inn(P), one per Aut(P)-class) and, for any subset of the essential
/// candidates, an admissible automizer of each; every generated system is
/// kept iff saturated. Throws ClassifierCapExceeded when |P| is above
/// caps().classifier_order.
ClassificationResult enumerate_saturated(const Subgroup& p, std::size_t prime, bool realize = true);

/// Every saturated system on P is controlled.
bool is_resistant(const Subgroup& p, std::size_t prime);
/// F_P(P) is the only saturated system on P.
bool is_fusion_trivial(const Subgroup& p, std::size_t prime);

/// True iff some automorphism of P carries a onto b (both on the same P).
bool isomorphic_by_aut(const FusionSystem& a, const FusionSystem& b, const std::vector<GroupMorphism>& aut_p);

}  // namespace fusion
