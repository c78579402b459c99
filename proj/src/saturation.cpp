#include "fusion/saturation.hpp"

#include <algorithm>

#include "fusion/error.hpp"
#include "fusion/numbers.hpp"

namespace fusion {

SaturationAnalysis::SaturationAnalysis(const FusionSystem& f)
    : f_(f),
      conj_(f_conjugacy(f)),
      automized_(f.lattice().size(), -1),
      receptive_(f.lattice().size(), -1),
      aut_p_(f.lattice().size()),
      receptive_failure_(f.lattice().size()) {}

std::size_t SaturationAnalysis::aut_p_order(std::size_t i) const {
  const auto& L = f_.lattice();
  return L[L.normalizer(i)].order() / L[L.centralizer(i)].order();
}

bool SaturationAnalysis::automized(std::size_t i) {
  if (automized_[i] < 0) automized_[i] = aut_p_order(i) == p_part(f_.aut_order(i), f_.prime());
  return automized_[i] != 0;
}

bool SaturationAnalysis::centralized(std::size_t i) {
  const auto& L = f_.lattice();
  const std::size_t c = L[L.centralizer(i)].order();
  for (std::size_t j : conj_.subgroup_classes[conj_.subgroup_class_of[i]])
    if (L[L.centralizer(j)].order() > c) return false;
  return true;
}

bool SaturationAnalysis::normalized(std::size_t i) {
  const auto& L = f_.lattice();
  const std::size_t n = L[L.normalizer(i)].order();
  for (std::size_t j : conj_.subgroup_classes[conj_.subgroup_class_of[i]])
    if (L[L.normalizer(j)].order() > n) return false;
  return true;
}

const std::vector<std::vector<Elem>>& SaturationAnalysis::aut_p_tables(std::size_t i) {
  if (!aut_p_[i]) {
    const auto& L = f_.lattice();
    const Subgroup& s = L[i];
    const FiniteGroup& G = s.group();
    std::vector<std::vector<Elem>> tabs;
    for (Elem y : L[L.normalizer(i)].members()) {
      std::vector<Elem> t(s.order());
      for (std::size_t k = 0; k < s.order(); ++k) t[k] = G.conj(y, s.members()[k]);
      tabs.push_back(std::move(t));
    }
    std::sort(tabs.begin(), tabs.end());
    tabs.erase(std::unique(tabs.begin(), tabs.end()), tabs.end());
    aut_p_[i] = std::move(tabs);
  }
  return *aut_p_[i];
}

Subgroup SaturationAnalysis::n_phi(std::size_t i, std::size_t j, const std::vector<Elem>& phi) {
  const auto& L = f_.lattice();
  const Subgroup& s = L[i];
  const Subgroup& t = L[j];
  const FiniteGroup& G = s.group();
  // phi^-1 as positions of T -> elements of S.
  std::vector<Elem> inv(t.order());
  for (std::size_t k = 0; k < s.order(); ++k) inv[*t.position(phi[k])] = s.members()[k];
  const auto& targets = aut_p_tables(j);
  std::vector<Elem> members;
  std::vector<Elem> tab(t.order());
  for (Elem x : L[L.normalizer(i)].members()) {
    for (std::size_t k = 0; k < t.order(); ++k) tab[k] = phi[*s.position(G.conj(x, inv[k]))];
    if (std::binary_search(targets.begin(), targets.end(), tab)) members.push_back(x);
  }
  return Subgroup(s.parent(), std::move(members));
}

std::optional<std::pair<std::size_t, std::vector<Elem>>> SaturationAnalysis::receptivity_failure(
    std::size_t j) {
  if (receptive_[j] >= 0) return receptive_failure_[j];
  const auto& L = f_.lattice();
  std::optional<std::pair<std::size_t, std::vector<Elem>>> failure;
  for (std::size_t i : conj_.subgroup_classes[conj_.subgroup_class_of[j]]) {
    const Subgroup& s = L[i];
    for (const auto& phi : f_.isomorphisms(i, j)) {
      const Subgroup n = n_phi(i, j, phi);
      const std::size_t ni = L.index_of(n);
      std::vector<std::size_t> pos(s.order());
      for (std::size_t k = 0; k < s.order(); ++k) pos[k] = *n.position(s.members()[k]);
      bool extends = false;
      for (const auto& psi : f_.maps_from(ni)) {
        bool agree = true;
        for (std::size_t k = 0; k < s.order() && agree; ++k) agree = psi[pos[k]] == phi[k];
        if (agree) {
          extends = true;
          break;
        }
      }
      if (!extends) {
        failure = std::make_pair(i, phi);
        break;
      }
    }
    if (failure) break;
  }
  receptive_[j] = failure ? 0 : 1;
  receptive_failure_[j] = failure;
  return failure;
}

bool SaturationAnalysis::receptive(std::size_t i) { return !receptivity_failure(i).has_value(); }

SubgroupStatus SaturationAnalysis::status(std::size_t i) {
  SubgroupStatus st;
  st.index = i;
  st.subgroup = f_.lattice()[i];
  st.automized = automized(i);
  st.centralized = centralized(i);
  st.normalized = normalized(i);
  st.receptive = receptive(i);
  return st;
}

namespace {

std::string subgroup_name(const SubgroupLattice& L, std::size_t i) {
  return i == L.top_index() ? "P" : "subgroup #" + std::to_string(i);
}

}  // namespace

SaturationReport SaturationAnalysis::evaluate(SaturationDefinition which) {
  const auto& L = f_.lattice();
  const std::size_t top = L.top_index();
  SaturationReport report;

  auto witness = [&](int clause, std::size_t i, std::string reason) {
    SaturationWitness w;
    w.clause = clause;
    w.subgroup = i;
    w.reason = std::move(reason);
    return w;
  };
  auto receptive_witness = [&](int clause, std::size_t i, std::string reason) {
    SaturationWitness w = witness(clause, i, std::move(reason));
    if (auto fail = receptivity_failure(i)) {
      w.morphism_domain = fail->first;
      w.morphism = fail->second;
    }
    return w;
  };
  auto p_not_automized = [&](int clause) { return witness(clause, top, "P not automized"); };

  auto clause1 = [&]() -> std::optional<SaturationWitness> {
    for (std::size_t i = 0; i < L.size(); ++i) {
      bool found = false;
      for (std::size_t j : conj_.subgroup_classes[conj_.subgroup_class_of[i]])
        if (automized(j) && receptive(j)) {
          found = true;
          break;
        }
      if (!found) {
        if (i == top && !automized(top)) return p_not_automized(1);
        return witness(1, i, "no automized receptive subgroup F-conjugate to " + subgroup_name(L, i));
      }
    }
    return std::nullopt;
  };
  auto clause2 = [&]() -> std::optional<SaturationWitness> {
    if (!automized(top)) return p_not_automized(2);
    for (std::size_t i = 0; i < L.size(); ++i) {
      bool found = false;
      for (std::size_t j : conj_.subgroup_classes[conj_.subgroup_class_of[i]])
        if (normalized(j) && receptive(j)) {
          found = true;
          break;
        }
      if (!found)
        return witness(2, i, "no normalized receptive subgroup F-conjugate to " + subgroup_name(L, i));
    }
    return std::nullopt;
  };
  auto clause3 = [&]() -> std::optional<SaturationWitness> {
    if (!automized(top)) return p_not_automized(3);
    for (std::size_t i = 0; i < L.size(); ++i)
      if (normalized(i) && !receptive(i))
        return receptive_witness(3, i, subgroup_name(L, i) + " normalized but not receptive");
    return std::nullopt;
  };
  auto clause4 = [&]() -> std::optional<SaturationWitness> {
    for (std::size_t i = 0; i < L.size(); ++i) {
      if (!normalized(i)) continue;
      if (!automized(i)) {
        if (i == top) return p_not_automized(4);
        return witness(4, i, subgroup_name(L, i) + " normalized but not automized");
      }
      if (!centralized(i)) return witness(4, i, subgroup_name(L, i) + " normalized but not centralized");
    }
    for (std::size_t i = 0; i < L.size(); ++i)
      if (centralized(i) && !receptive(i))
        return receptive_witness(4, i, subgroup_name(L, i) + " centralized but not receptive");
    return std::nullopt;
  };

  const int w = static_cast<int>(which);
  auto run = [&](int k, auto&& fn) {
    if (w != 0 && w != k) return;
    auto wit = fn();
    report.verdicts[k - 1] = !wit.has_value();
    report.witnesses[k - 1] = wit;
    if (wit && !report.witness) report.witness = wit;
  };
  run(1, clause1);
  run(2, clause2);
  run(3, clause3);
  run(4, clause4);

  report.saturated = true;
  for (auto& v : report.verdicts)
    if (v && !*v) report.saturated = false;
  return report;
}

SubgroupStatus status(const FusionSystem& f, const Subgroup& s) {
  SaturationAnalysis a(f);
  return a.status(f.lattice().index_of(s));
}

Subgroup n_phi(const FusionSystem& f, const GroupMorphism& phi) {
  if (!f.contains(phi)) throw FusionError(ErrorKind::NotIsoInF, "morphism is not in F");
  const std::size_t i = f.lattice().index_of(phi.domain());
  const Subgroup im = phi.image();
  if (!(phi.codomain() == im) && !(phi.codomain() == f.p_group()))
    throw FusionError(ErrorKind::NotIsoInF, "morphism is not an isomorphism onto its codomain");
  SaturationAnalysis a(f);
  return a.n_phi(i, f.lattice().index_of(im), phi.images());
}

SaturationReport is_saturated(const FusionSystem& f, SaturationDefinition which) {
  SaturationAnalysis a(f);
  SaturationReport r = a.evaluate(which);
  if (which == SaturationDefinition::all) {
    for (auto& v : r.verdicts)
      if (*v != *r.verdicts[0])
        throw FusionError(ErrorKind::DefinitionDisagreement,
                          "saturation clauses disagree on " + f.provenance().description);
  }
  return r;
}

}  // namespace fusion
