#pragma once

#include <string_view>

#include "fusion/fusion_system.hpp"

namespace fusion {

enum class LocalKind { centralizer, normalizer, q_centralizer };
std::string_view to_string(LocalKind k);

/// C_F(Q) on C_P(Q), N_F(Q) on N_P(Q), QC_F(Q) on QC_P(Q). A subgroup Q
/// that is not F-normalized is replaced by the normalized representative
/// of its class (recorded in the provenance notes) unless `substitute` is
/// false, in which case NotNormalizedRepresentative is thrown.
FusionSystem local_subsystem(const FusionSystem& f, const Subgroup& q, LocalKind kind,
                             bool substitute = true);

/// Z(F): elements fixed by every morphism out of the cyclic subgroup they generate.
Subgroup center(const FusionSystem& f);

/// N_F(Q) = F. Q must be normal in P (NotNormal otherwise).
bool is_normal(const FusionSystem& f, const Subgroup& q);

/// Largest normal subgroup of F.
Subgroup o_p(const FusionSystem& f);

/// C_P(O_p(F)) <= O_p(F).
bool is_constrained(const FusionSystem& f);

struct QuotientSystem {
  Quotient quotient;
  FusionSystem system;
};

/// F/Q on P/Q. Throws NotNormalInF unless Q is normal in F.
QuotientSystem quotient_fusion_system(const FusionSystem& f, const Subgroup& q);

}  // namespace fusion
