#include "fusion/local_structure.hpp"

#include <algorithm>
#include <set>

#include "fusion/error.hpp"
#include "fusion/saturation.hpp"
#include "fusion/subgroups.hpp"

namespace fusion {

std::string_view to_string(LocalKind k) {
  switch (k) {
    case LocalKind::centralizer: return "centralizer";
    case LocalKind::normalizer: return "normalizer";
    case LocalKind::q_centralizer: return "q_centralizer";
  }
  return "?";
}

namespace {

std::string kind_label(LocalKind k) {
  switch (k) {
    case LocalKind::centralizer: return "C_F(Q)";
    case LocalKind::normalizer: return "N_F(Q)";
    case LocalKind::q_centralizer: return "QC_F(Q)";
  }
  return "?";
}

}  // namespace

FusionSystem local_subsystem(const FusionSystem& f, const Subgroup& q_in, LocalKind kind, bool substitute) {
  const SubgroupLattice& L = f.lattice();
  std::size_t qi = L.index_of(q_in);
  Provenance prov;
  prov.kind = ProvenanceKind::derived_local;
  prov.description = kind_label(kind);
  {
    SaturationAnalysis a(f);
    if (!a.normalized(qi)) {
      if (!substitute)
        throw FusionError(ErrorKind::NotNormalizedRepresentative, "Q is not F-normalized");
      const auto& part = a.conjugacy();
      const std::size_t rep = part.representatives[part.subgroup_class_of[qi]];
      prov.notes.push_back("Q replaced by normalized representative #" + std::to_string(rep) + " of subgroup #" +
                           std::to_string(qi));
      qi = rep;
    }
  }
  const Subgroup& q = L[qi];
  const Subgroup& p = f.p_group();
  const FiniteGroup& G = p.group();

  Subgroup r;
  switch (kind) {
    case LocalKind::centralizer: r = L[L.centralizer(qi)]; break;
    case LocalKind::normalizer: r = L[L.normalizer(qi)]; break;
    case LocalKind::q_centralizer: r = join(q, L[L.centralizer(qi)]); break;
  }
  LatticePtr lattice = r == p ? f.lattice_ptr() : std::make_shared<const SubgroupLattice>(r);
  const SubgroupLattice& M = *lattice;

  std::set<std::vector<Elem>> inner;
  if (kind == LocalKind::q_centralizer)
    for (Elem x : q.members()) {
      std::vector<Elem> t(q.order());
      for (std::size_t k = 0; k < q.order(); ++k) t[k] = G.conj(x, q.members()[k]);
      inner.insert(std::move(t));
    }
  const std::vector<Elem> q_ident(q.members().begin(), q.members().end());

  std::vector<std::vector<FusionSystem::Table>> maps(M.size());
  for (std::size_t i = 0; i < M.size(); ++i) {
    const Subgroup& s = M[i];
    const Subgroup qs = join(q, s);
    const std::size_t qsi = L.index_of(qs);
    std::vector<std::size_t> qpos(q.order()), spos(s.order());
    for (std::size_t k = 0; k < q.order(); ++k) qpos[k] = *qs.position(q.members()[k]);
    for (std::size_t k = 0; k < s.order(); ++k) spos[k] = *qs.position(s.members()[k]);
    std::set<FusionSystem::Table> found;
    std::vector<Elem> qt(q.order());
    for (const auto& psi : f.maps_from(qsi)) {
      for (std::size_t k = 0; k < q.order(); ++k) qt[k] = psi[qpos[k]];
      bool ok = false;
      switch (kind) {
        case LocalKind::centralizer: ok = qt == q_ident; break;
        case LocalKind::normalizer: {
          ok = true;
          for (Elem y : qt) ok = ok && q.contains(y);
          break;
        }
        case LocalKind::q_centralizer: ok = inner.count(qt) > 0; break;
      }
      if (!ok) continue;
      FusionSystem::Table t(s.order());
      for (std::size_t k = 0; k < s.order(); ++k) t[k] = psi[spos[k]];
      found.insert(std::move(t));
    }
    maps[i].assign(found.begin(), found.end());
  }
  return FusionSystem(f.prime(), std::move(lattice), std::move(maps), std::move(prov));
}

Subgroup center(const FusionSystem& f) {
  const SubgroupLattice& L = f.lattice();
  const Subgroup& p = f.p_group();
  std::vector<Elem> fixed;
  for (Elem x : p.members()) {
    const std::vector<Elem> one{x};
    const Subgroup c = generate_subgroup(p.parent(), one);
    const std::size_t ci = L.index_of(c);
    const std::size_t pos = *c.position(x);
    bool all = true;
    for (const auto& t : f.maps_from(ci)) all = all && t[pos] == x;
    if (all) fixed.push_back(x);
  }
  return Subgroup::checked(p.parent(), std::move(fixed));
}

bool is_normal(const FusionSystem& f, const Subgroup& q) {
  if (!is_normal_in(f.p_group(), q)) throw FusionError(ErrorKind::NotNormal, "Q is not normal in P");
  return subsystem_equal(local_subsystem(f, q, LocalKind::normalizer, false), f);
}

Subgroup o_p(const FusionSystem& f) {
  const SubgroupLattice& L = f.lattice();
  Subgroup result = Subgroup::trivial(f.p_group().parent());
  for (std::size_t i = 0; i < L.size(); ++i) {
    if (!L.is_normal_in_top(i) || result.contains(L[i])) continue;
    if (is_normal(f, L[i])) result = join(result, L[i]);
  }
  return result;
}

bool is_constrained(const FusionSystem& f) {
  const Subgroup o = o_p(f);
  return o.contains(centralizer(f.p_group(), o));
}

QuotientSystem quotient_fusion_system(const FusionSystem& f, const Subgroup& q) {
  const SubgroupLattice& L = f.lattice();
  const Subgroup& p = f.p_group();
  if (!is_normal_in(p, q) || !is_normal(f, q))
    throw FusionError(ErrorKind::NotNormalInF, "Q is not normal in F");
  Quotient quo = quotient_group(p, q);
  const Subgroup top = Subgroup::whole(quo.group);
  auto lattice = std::make_shared<const SubgroupLattice>(top);
  const SubgroupLattice& M = *lattice;

  std::vector<Elem> lift(quo.group->order(), Quotient::kOutside);
  for (Elem x : p.members())
    if (lift[quo.project(x)] == Quotient::kOutside) lift[quo.project(x)] = x;

  std::vector<std::vector<FusionSystem::Table>> maps(M.size());
  for (std::size_t i = 0; i < M.size(); ++i) {
    const Subgroup& sbar = M[i];
    const Subgroup s = quo.preimage(sbar, p);
    const std::size_t si = L.index_of(s);
    std::set<FusionSystem::Table> found;
    for (const auto& psi : f.maps_from(si)) {
      FusionSystem::Table t(sbar.order());
      for (std::size_t k = 0; k < sbar.order(); ++k) t[k] = quo.project(psi[*s.position(lift[sbar.members()[k]])]);
      found.insert(std::move(t));
    }
    maps[i].assign(found.begin(), found.end());
  }
  Provenance prov;
  prov.kind = ProvenanceKind::derived_local;
  prov.description = "F/Q";
  return QuotientSystem{std::move(quo), FusionSystem(f.prime(), std::move(lattice), std::move(maps), std::move(prov))};
}

}  // namespace fusion
