#include "fusion/transfer.hpp"

#include <set>

#include "fusion/error.hpp"
#include "fusion/morphism.hpp"
#include "fusion/numbers.hpp"
#include "fusion/registry.hpp"
#include "fusion/saturation.hpp"
#include "fusion/subgroups.hpp"

namespace fusion {

std::string_view to_string(FocalKind k) { return k == FocalKind::focal ? "focal" : "hyperfocal"; }

namespace {

void require_sylow(const Subgroup& g, const Subgroup& p, std::size_t prime) {
  if (!is_prime(prime) || !is_sylow(g, p, prime))
    throw FusionError(ErrorKind::NotSylow, "P is not a Sylow " + std::to_string(prime) + "-subgroup of G");
}

void require_between(const Subgroup& g, const Subgroup& k, const Subgroup& p) {
  if (!g.contains(k) || !k.contains(p)) throw FusionError(ErrorKind::ContainmentViolated, "need P <= K <= G");
}

// Grows a subgroup of P's parent one new generator at a time.
class Accumulator {
 public:
  explicit Accumulator(const GroupPtr& parent) : sub_(Subgroup::trivial(parent)) {}
  void add(Elem z) {
    if (!sub_.contains(z)) {
      const Elem one[] = {z};
      sub_ = extend_subgroup(sub_, one);
    }
  }
  const Subgroup& result() const { return sub_; }

 private:
  Subgroup sub_;
};

}  // namespace

Subgroup group_focal(const Subgroup& g, const Subgroup& p, std::size_t prime, FocalKind kind) {
  require_sylow(g, p, prime);
  const FiniteGroup& G = g.group();
  Accumulator acc(p.parent());
  for (Elem h : g.members()) {
    if (kind == FocalKind::hyperfocal && G.element_order(h) % prime == 0) continue;
    for (Elem x : p.members()) {
      const Elem y = G.conj(h, x);
      if (p.contains(y)) acc.add(G.mul(x, G.inv(y)));
    }
  }
  return acc.result();
}

Subgroup system_focal(const FusionSystem& f, FocalKind kind) {
  const SubgroupLattice& L = f.lattice();
  const Subgroup& p = f.p_group();
  const FiniteGroup& G = p.group();
  Accumulator acc(p.parent());
  if (kind == FocalKind::focal) {
    for (Elem x : p.members()) {
      const Elem one[] = {x};
      const Subgroup c = generate_subgroup(p.parent(), one);
      const std::size_t ci = L.index_of(c);
      const std::size_t pos = *c.position(x);
      for (const auto& t : f.maps_from(ci)) acc.add(G.mul(t[pos], G.inv(x)));
    }
    return acc.result();
  }
  if (!is_saturated(f).saturated) throw FusionError(ErrorKind::NotSaturated, "hyp(F) needs a saturated system");
  for (std::size_t i = 0; i < L.size(); ++i) {
    // O^p of a p-group is trivial.
    if (is_p_power(f.aut_order(i), f.prime())) continue;
    const Subgroup& q = L[i];
    const RealizedAutGroup r = realize_aut_group(q, f.automorphisms(i));
    const Subgroup residue =
        characteristic_subgroup(Subgroup::whole(r.carrier), CharacteristicKind::p_residue, f.prime());
    for (Elem e : residue.members()) {
      const GroupMorphism& phi = r.tagging[e];
      for (Elem x : q.members()) acc.add(G.mul(phi(x), G.inv(x)));
    }
  }
  return acc.result();
}

PNilpotencyReport is_p_nilpotent(const Subgroup& g, std::size_t prime) {
  if (!is_prime(prime)) throw FusionError(ErrorKind::InvalidInput, "p must be prime");
  const Subgroup p = sylow_subgroup(g, prime);
  auto lattice = std::make_shared<const SubgroupLattice>(p);
  PNilpotencyReport r;

  const auto fg = fusion_system_of_group(g, p, prime, lattice);
  r.criteria.push_back({"fusion_free", subsystem_equal(fg, trivial_fusion_system(p, prime, lattice))});

  bool frob = true;
  for (const auto& q : lattice->subgroups())
    frob = frob && is_p_power(normalizer(g, q).order() / centralizer(g, q).order(), prime);
  r.criteria.push_back({"frobenius_quotient", frob});

  const Subgroup k = characteristic_subgroup(g, CharacteristicKind::o_p_prime, prime);
  r.criteria.push_back({"product_decomposition", k.order() * p.order() == g.order()});

  const Subgroup hyp = group_focal(g, p, prime, FocalKind::hyperfocal);
  r.criteria.push_back({"hyperfocal_trivial", hyp.is_trivial()});
  r.criteria.push_back(
      {"hyperfocal_in_frattini", characteristic_subgroup(p, CharacteristicKind::frattini, prime).contains(hyp)});

  r.p_nilpotent = r.criteria.front().holds;
  for (const auto& c : r.criteria)
    if (c.holds != r.p_nilpotent)
      throw FusionError(ErrorKind::CriterionDisagreement, "criterion " + c.name + " disagrees");
  return r;
}

bool controls_fusion(const Subgroup& g, const Subgroup& k, const Subgroup& p, std::size_t prime) {
  require_between(g, k, p);
  require_sylow(g, p, prime);
  auto lattice = std::make_shared<const SubgroupLattice>(p);
  return subsystem_equal(fusion_system_of_group(k, p, prime, lattice),
                         fusion_system_of_group(g, p, prime, lattice));
}

bool controls_fusion_on(const Subgroup& g, const Subgroup& k, const Subgroup& a) {
  if (!g.contains(k)) throw FusionError(ErrorKind::ContainmentViolated, "need K <= G");
  const FiniteGroup& G = g.group();
  for (Elem x : a.members()) {
    std::set<Elem> in_g, in_k;
    for (Elem h : g.members())
      if (const Elem y = G.conj(h, x); a.contains(y)) in_g.insert(y);
    for (Elem h : k.members())
      if (const Elem y = G.conj(h, x); a.contains(y)) in_k.insert(y);
    if (in_g != in_k) return false;
  }
  return true;
}

TransferReport controls_transfer(const Subgroup& g, const Subgroup& h, const Subgroup& p, std::size_t prime) {
  require_between(g, h, p);
  require_sylow(g, p, prime);
  const Subgroup foc_g = group_focal(g, p, prime, FocalKind::focal);
  const Subgroup foc_h = group_focal(h, p, prime, FocalKind::focal);
  const Subgroup hyp_g = group_focal(g, p, prime, FocalKind::hyperfocal);
  const Subgroup hyp_h = group_focal(h, p, prime, FocalKind::hyperfocal);
  const Subgroup phi = characteristic_subgroup(p, CharacteristicKind::frattini, prime);
  TransferReport r;
  r.focal_equal = foc_g == foc_h;
  r.hyperfocal_equal = hyp_g == hyp_h;
  r.focal_frattini_equal = join(foc_g, phi) == join(foc_h, phi);
  if (r.focal_equal != r.hyperfocal_equal || r.focal_equal != r.focal_frattini_equal)
    throw FusionError(ErrorKind::ClauseDisagreement, "transfer-control clauses disagree");
  r.controls = r.focal_equal;
  return r;
}

GrunReport grun_check(const Subgroup& g, const Subgroup& p, std::size_t prime) {
  GrunReport r;
  r.focal = group_focal(g, p, prime, FocalKind::focal);
  Subgroup rhs = commutator_subgroup(normalizer(g, p), p);
  for (const auto& q : all_sylow_subgroups(g, prime)) rhs = join(rhs, intersection(p, commutator_subgroup(q, q)));
  r.formula = rhs;
  r.equal = r.focal == r.formula;
  return r;
}

bool has_wreath_quotient(const Subgroup& p, std::size_t prime) {
  std::size_t target = 1;
  for (std::size_t k = 0; k <= prime; ++k) {
    target *= prime;
    if (target > p.order()) return false;
  }
  if (p.order() % target != 0 || is_abelian(p)) return false;
  const std::string name = "C" + std::to_string(prime) + "wrC" + std::to_string(prime);
  const Subgroup w = Subgroup::whole(named_group(name));
  for (const auto& n : normal_subgroups(p)) {
    if (n.order() * target != p.order()) continue;
    const Quotient q = quotient_group(p, n);
    if (are_isomorphic(Subgroup::whole(q.group), w)) return true;
  }
  return false;
}

ZJReport zj_control_check(const Subgroup& g, const Subgroup& p, std::size_t prime) {
  if (prime == 2 || !is_prime(prime)) throw FusionError(ErrorKind::InvalidInput, "ZJ check needs an odd prime");
  require_sylow(g, p, prime);
  ZJReport r;
  const std::size_t qd_order = prime * prime * prime * (prime * prime - 1);
  r.qd_free = g.order() % qd_order != 0 ||
              !has_section_isomorphic(g, Subgroup::whole(named_group("Qd(" + std::to_string(prime) + ")")));
  r.zj = center(characteristic_subgroup(p, CharacteristicKind::thompson_j, prime));
  r.controls = controls_fusion(g, normalizer(g, r.zj), p, prime);
  return r;
}

}  // namespace fusion
