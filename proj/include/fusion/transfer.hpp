#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fusion/fusion_system.hpp"

namespace fusion {

enum class FocalKind { focal, hyperfocal };
std::string_view to_string(FocalKind k);

/// Generator definitions: <x y^-1 : x, y in P conjugate in G>, and the same
/// with conjugation by p'-elements only. Throws NotSylow.
Subgroup group_focal(const Subgroup& g, const Subgroup& p, std::size_t prime, FocalKind kind);

/// foc(F) from F-maps out of cyclic subgroups; hyp(F) from O^p(Aut_F(Q))
/// over all Q. The hyperfocal case throws NotSaturated on unsaturated F.
Subgroup system_focal(const FusionSystem& f, FocalKind kind);

struct Criterion {
  std::string name;
  bool holds = false;
};

struct PNilpotencyReport {
  bool p_nilpotent = false;
  std::vector<Criterion> criteria;
};

/// Five characterizations: F_P(G) = F_P(P); N_G(Q)/C_G(Q) a p-group for all
/// Q <= P; G = O_p'(G)P; hyp_G(P) = 1; hyp_G(P) <= Phi(P).
/// Throws CriterionDisagreement if they do not all agree.
PNilpotencyReport is_p_nilpotent(const Subgroup& g, std::size_t prime);

/// F_P(K) = F_P(G). Throws ContainmentViolated unless P <= K <= G.
bool controls_fusion(const Subgroup& g, const Subgroup& k, const Subgroup& p, std::size_t prime);

/// Elements of A (a subset of K) are K-conjugate iff G-conjugate.
bool controls_fusion_on(const Subgroup& g, const Subgroup& k, const Subgroup& a);

struct TransferReport {
  bool controls = false;
  bool focal_equal = false;
  bool hyperfocal_equal = false;
  bool focal_frattini_equal = false;
};

/// The three transfer-control clauses for P <= H <= G. Throws
/// ContainmentViolated, NotSylow, or ClauseDisagreement.
TransferReport controls_transfer(const Subgroup& g, const Subgroup& h, const Subgroup& p, std::size_t prime);

struct GrunReport {
  bool equal = false;
  Subgroup focal;
  /// [N_G(P), P] <P ∩ Q' : Q Sylow>.
  Subgroup formula;
};

GrunReport grun_check(const Subgroup& g, const Subgroup& p, std::size_t prime);

/// Some quotient of P is isomorphic to C_p wr C_p.
bool has_wreath_quotient(const Subgroup& p, std::size_t prime);

struct ZJReport {
  bool qd_free = false;
  bool controls = false;
  Subgroup zj;
};

/// Qd(p)-freeness of G and whether N_G(Z(J(P))) controls fusion in P.
/// p must be odd (InvalidInput otherwise).
ZJReport zj_control_check(const Subgroup& g, const Subgroup& p, std::size_t prime);

}  // namespace fusion
