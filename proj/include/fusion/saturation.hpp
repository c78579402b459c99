#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fusion/fusion_system.hpp"

namespace fusion {

struct SubgroupStatus {
  std::size_t index = 0;
  Subgroup subgroup;
  bool automized = false;
  bool centralized = false;
  bool normalized = false;
  bool receptive = false;
};

/// Which characterization of saturation to evaluate. `all` runs the four
/// and requires them to agree.
/// 1: every subgroup is F-conjugate to an automized receptive one.
/// 2: P automized, every subgroup F-conjugate to a normalized receptive one.
/// 3: P automized, every normalized subgroup receptive.
/// 4: normalized implies automized and centralized; centralized implies receptive.
enum class SaturationDefinition {
  conjugate_automized_receptive = 1,
  conjugate_normalized_receptive = 2,
  normalized_receptive = 3,
  centralized_receptive = 4,
  all = 0
};

struct SaturationWitness {
  int clause = 0;
  std::size_t subgroup = 0;
  /// A morphism that fails to extend, as a table aligned with its domain.
  std::optional<std::size_t> morphism_domain;
  std::vector<Elem> morphism;
  std::string reason;
};

struct SaturationReport {
  /// verdicts[k] answers clause k+1; clauses not evaluated stay empty.
  std::array<std::optional<bool>, 4> verdicts{};
  std::array<std::optional<SaturationWitness>, 4> witnesses{};
  bool saturated = false;
  /// Witness of the first failing clause.
  std::optional<SaturationWitness> witness;
};

/// Caches subgroup statuses of one system. Statuses are computed on demand.
class SaturationAnalysis {
 public:
  explicit SaturationAnalysis(const FusionSystem& f);

  const FusionSystem& system() const { return f_; }
  const FConjugacyPartition& conjugacy() const { return conj_; }

  bool automized(std::size_t i);
  bool centralized(std::size_t i);
  bool normalized(std::size_t i);
  bool receptive(std::size_t i);
  SubgroupStatus status(std::size_t i);

  /// |Aut_P(S_i)| = |N_P(S_i)| / |C_P(S_i)|.
  std::size_t aut_p_order(std::size_t i) const;

  /// N_phi for an isomorphism S_i -> S_j given as a table aligned with S_i.
  Subgroup n_phi(std::size_t i, std::size_t j, const std::vector<Elem>& phi);
  /// The first isomorphism into S_i that fails to extend to its N_phi.
  std::optional<std::pair<std::size_t, std::vector<Elem>>> receptivity_failure(std::size_t i);

  SaturationReport evaluate(SaturationDefinition which);

 private:
  const std::vector<std::vector<Elem>>& aut_p_tables(std::size_t i);

  const FusionSystem& f_;
  FConjugacyPartition conj_;
  std::vector<signed char> automized_, receptive_;
  std::vector<std::optional<std::vector<std::vector<Elem>>>> aut_p_;
  std::vector<std::optional<std::pair<std::size_t, std::vector<Elem>>>> receptive_failure_;
};

SubgroupStatus status(const FusionSystem& f, const Subgroup& s);

/// Throws NotIsoInF unless phi is an isomorphism S -> T in F (T = image).
Subgroup n_phi(const FusionSystem& f, const GroupMorphism& phi);

/// Throws DefinitionDisagreement when `all` finds the clauses disagreeing.
SaturationReport is_saturated(const FusionSystem& f,
                              SaturationDefinition which = SaturationDefinition::all);

}  // namespace fusion
