#include "fusion/essential.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "fusion/config.hpp"
#include "fusion/error.hpp"
#include "fusion/local_structure.hpp"
#include "fusion/numbers.hpp"
#include "fusion/saturation.hpp"
#include "fusion/subgroups.hpp"

namespace fusion {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

bool strongly_embedded(const Subgroup& l, const Subgroup& h, std::size_t prime) {
  if (h == l || h.order() % prime != 0) return false;
  const FiniteGroup& G = l.group();
  std::vector<bool> seen_coset(G.order(), false);
  for (Elem x : l.members()) {
    if (h.contains(x) || seen_coset[x]) continue;
    // x and xh give the same conjugate of H.
    for (Elem y : h.members()) seen_coset[G.mul(x, y)] = true;
    const Elem xi = G.inv(x);
    std::size_t common = 0;
    for (Elem y : h.members()) common += h.contains(G.conj(xi, y));
    if (common % prime == 0) return false;
  }
  return true;
}

std::size_t find_root(std::vector<std::size_t>& up, std::size_t a) {
  while (up[a] != a) a = up[a] = up[up[a]];
  return a;
}

std::size_t table_order(const Subgroup& q, const std::vector<Elem>& t) {
  std::vector<bool> done(q.order(), false);
  std::size_t order = 1;
  for (std::size_t k = 0; k < q.order(); ++k) {
    if (done[k]) continue;
    std::size_t len = 0;
    for (std::size_t j = k; !done[j]; j = *q.position(t[j])) {
      done[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

void require_saturated(const FusionSystem& f) {
  if (!is_saturated(f).saturated) throw FusionError(ErrorKind::NotSaturated, "F is not saturated");
}

}  // namespace

StronglyEmbeddedResult has_strongly_p_embedded(const Subgroup& l, std::size_t prime) {
  StronglyEmbeddedResult r;
  if (l.order() % prime != 0) return r;

  const auto sylows = all_sylow_subgroups(l, prime);
  std::vector<std::size_t> up(sylows.size());
  std::iota(up.begin(), up.end(), 0);
  for (std::size_t a = 0; a < sylows.size(); ++a)
    for (std::size_t b = a + 1; b < sylows.size(); ++b)
      if (!intersection(sylows[a], sylows[b]).is_trivial()) up[find_root(up, a)] = find_root(up, b);
  std::size_t components = 0;
  for (std::size_t a = 0; a < sylows.size(); ++a) components += find_root(up, a) == a;
  r.found = components > 1;

  if (l.order() <= caps().direct_embedding) {
    r.direct_search_ran = true;
    for (const auto& h : all_subgroups(l, caps().direct_embedding))
      if (strongly_embedded(l, h, prime)) {
        r.witness = h;
        break;
      }
    if (r.witness.has_value() != r.found)
      throw FusionError(ErrorKind::MethodDisagreement, "Sylow graph and direct search disagree");
  }
  return r;
}

EssentialReport essential_subgroups(const FusionSystem& f) {
  require_saturated(f);
  const SubgroupLattice& L = f.lattice();
  const auto part = f_conjugacy(f);
  EssentialReport report;
  for (std::size_t c = 0; c < part.subgroup_classes.size(); ++c) {
    const std::size_t rep = part.representatives[c];
    if (rep == L.top_index()) continue;
    const Subgroup& q = L[rep];
    if (!q.contains(L[L.centralizer(rep)])) continue;
    const RealizedAutGroup aut = realize_aut_group(q, f.automorphisms(rep));
    const Quotient out = aut.out();
    if (!has_strongly_p_embedded(Subgroup::whole(out.group), f.prime()).found) continue;
    report.classes.push_back({rep, q, part.subgroup_classes[c], out.group->order()});
  }
  report.rank = report.classes.size();
  return report;
}

bool is_essential(const FusionSystem& f, const Subgroup& q) {
  const std::size_t i = f.lattice().index_of(q);
  for (const auto& cls : essential_subgroups(f).classes)
    if (std::binary_search(cls.members.begin(), cls.members.end(), i)) return true;
  return false;
}

bool is_radical(const FusionSystem& f, const Subgroup& q) {
  const RealizedAutGroup aut = realize_aut_group(q, f.automorphisms(f.lattice().index_of(q)));
  return characteristic_subgroup(Subgroup::whole(aut.carrier), CharacteristicKind::o_p, f.prime()) == aut.inner;
}

GroupMorphism recompose(const FactorizationWitness& w) {
  std::vector<Elem> t(w.target.domain().members().begin(), w.target.domain().members().end());
  for (const auto& step : w.steps)
    for (Elem& x : t) {
      if (!step.domain.contains(x))
        throw FusionError(ErrorKind::NoFactorization, "factorization step applied outside its domain");
      x = step.aut(x);
    }
  return GroupMorphism(w.target.domain(), w.target.codomain(), std::move(t));
}

AlperinFactorizer::AlperinFactorizer(const FusionSystem& f) : f_(f), report_(essential_subgroups(f)) {
  const SubgroupLattice& L = f.lattice();
  std::vector<std::size_t> order{L.top_index()};
  for (const auto& cls : report_.classes) order.push_back(cls.representative);
  std::sort(order.begin() + 1, order.end());
  for (std::size_t q : order) {
    Mover m{q, {}};
    for (std::size_t k = 0; k < f.maps_from(q).size(); ++k) {
      if (f.image_index(q, k) != q) continue;
      const auto& t = f.maps_from(q)[k];
      if (q != L.top_index() && !is_p_power(table_order(L[q], t), f.prime())) continue;
      m.auts.push_back(t);
    }
    movers_.push_back(std::move(m));
  }
}

const AlperinFactorizer::Tree& AlperinFactorizer::tree_for(std::size_t domain) {
  if (auto it = trees_.find(domain); it != trees_.end()) return it->second;
  const SubgroupLattice& L = f_.lattice();
  Tree tree;
  const std::vector<Elem> start(L[domain].members().begin(), L[domain].members().end());
  tree.parent.emplace(start, std::make_tuple(std::vector<Elem>{}, kNone, kNone));
  std::deque<std::vector<Elem>> queue{start};
  while (!queue.empty()) {
    const std::vector<Elem> t = std::move(queue.front());
    queue.pop_front();
    for (std::size_t m = 0; m < movers_.size(); ++m) {
      const Subgroup& q = L[movers_[m].q];
      if (!std::all_of(t.begin(), t.end(), [&](Elem x) { return q.contains(x); })) continue;
      for (std::size_t a = 0; a < movers_[m].auts.size(); ++a) {
        const auto& psi = movers_[m].auts[a];
        std::vector<Elem> next(t.size());
        for (std::size_t k = 0; k < t.size(); ++k) next[k] = psi[*q.position(t[k])];
        if (tree.parent.emplace(next, std::make_tuple(t, m, a)).second) queue.push_back(std::move(next));
      }
    }
  }
  return trees_.emplace(domain, std::move(tree)).first->second;
}

FactorizationWitness AlperinFactorizer::factorize(const GroupMorphism& phi) {
  const SubgroupLattice& L = f_.lattice();
  if (!f_.contains(phi)) throw FusionError(ErrorKind::NotIsoInF, "morphism is not in F");
  const std::size_t a = L.index_of(phi.domain());
  const Tree& tree = tree_for(a);
  auto it = tree.parent.find(phi.images());
  if (it == tree.parent.end())
    throw FusionError(ErrorKind::NoFactorization, "no factorization through essentials and P");

  FactorizationWitness w{phi, {}};
  const GroupPtr& parent = f_.p_group().parent();
  while (std::get<1>(it->second) != kNone) {
    const auto& [prev, m, k] = it->second;
    const Subgroup& q = L[movers_[m].q];
    std::vector<Elem> dom = prev;
    std::sort(dom.begin(), dom.end());
    w.steps.push_back({q, GroupMorphism(q, q, movers_[m].auts[k]), Subgroup::checked(parent, std::move(dom))});
    it = tree.parent.find(prev);
  }
  std::reverse(w.steps.begin(), w.steps.end());
  if (w.steps.empty()) {
    const Subgroup& p = f_.p_group();
    w.steps.push_back({p, GroupMorphism::identity(p), phi.domain()});
  }
  if (recompose(w) != phi) throw FusionError(ErrorKind::NoFactorization, "recomposition mismatch");
  return w;
}

FactorizationWitness alperin_factorize(const FusionSystem& f, const GroupMorphism& phi) {
  AlperinFactorizer fac(f);
  return fac.factorize(phi);
}

ControlFlags classify_control(const FusionSystem& f) {
  ControlFlags c;
  c.trivial = subsystem_equal(f, trivial_fusion_system(f.p_group(), f.prime(), f.lattice_ptr()));
  c.controlled = essential_subgroups(f).rank == 0;
  c.constrained = is_constrained(f);
  if (c.controlled && !c.constrained) throw std::logic_error("controlled system reported unconstrained");
  return c;
}

}  // namespace fusion
