#include "fusion/fusion_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "fusion/error.hpp"
#include "fusion/numbers.hpp"
#include "fusion/subgroups.hpp"

namespace fusion {

std::size_t SubgroupLattice::VecHash::operator()(const std::vector<Elem>& v) const noexcept {
  std::size_t h = v.size();
  for (Elem e : v) h = h * 1000003u ^ e;
  return h;
}

SubgroupLattice::SubgroupLattice(const Subgroup& p) : subs_(all_subgroups(p)) {
  const FiniteGroup& g = p.group();
  local_.assign(g.order(), npos);
  for (std::size_t i = 0; i < p.order(); ++i) local_[p.members()[i]] = i;
  for (std::size_t i = 0; i < subs_.size(); ++i) {
    const auto m = subs_[i].members();
    index_.emplace(std::vector<Elem>(m.begin(), m.end()), i);
  }
  normalizer_.resize(subs_.size());
  centralizer_.resize(subs_.size());
  below_.resize(subs_.size());
  const Subgroup& top = subs_.back();
  for (std::size_t i = 0; i < subs_.size(); ++i) {
    normalizer_[i] = *find(fusion::normalizer(top, subs_[i]));
    centralizer_[i] = *find(fusion::centralizer(top, subs_[i]));
    for (std::size_t j = 0; j <= i; ++j) {
      if (subs_[i].order() % subs_[j].order() != 0) continue;
      const auto& mi = subs_[i].mask();
      const auto& mj = subs_[j].mask();
      bool sub = true;
      for (std::size_t w = 0; w < mi.size() && sub; ++w) sub = (mj[w] & ~mi[w]) == 0;
      if (sub) below_[i].push_back(j);
    }
  }
}

std::optional<std::size_t> SubgroupLattice::find(const Subgroup& s) const {
  if (!same_group(s.parent(), top().parent())) return std::nullopt;
  const auto m = s.members();
  return find_members(std::vector<Elem>(m.begin(), m.end()));
}

std::optional<std::size_t> SubgroupLattice::find_members(const std::vector<Elem>& sorted) const {
  auto it = index_.find(sorted);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SubgroupLattice::index_of(const Subgroup& s) const {
  auto i = find(s);
  if (!i) throw FusionError(ErrorKind::ForeignSubgroup, "subgroup is not contained in P");
  return *i;
}

std::string_view to_string(ProvenanceKind k) {
  switch (k) {
    case ProvenanceKind::from_group: return "from_group";
    case ProvenanceKind::universal: return "universal";
    case ProvenanceKind::generated: return "generated";
    case ProvenanceKind::derived_local: return "derived_local";
  }
  return "?";
}

FusionSystem::FusionSystem(std::size_t p, LatticePtr lattice, std::vector<std::vector<Table>> maps,
                           Provenance provenance)
    : p_(p), lattice_(std::move(lattice)), maps_(std::move(maps)), provenance_(std::move(provenance)) {
  image_.resize(maps_.size());
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    std::sort(maps_[i].begin(), maps_[i].end());
    maps_[i].erase(std::unique(maps_[i].begin(), maps_[i].end()), maps_[i].end());
    image_[i].reserve(maps_[i].size());
    for (const auto& t : maps_[i]) {
      Table s = t;
      std::sort(s.begin(), s.end());
      auto j = lattice_->find_members(s);
      if (!j) throw FusionError(ErrorKind::InvalidInput, "morphism image is not a subgroup of P");
      image_[i].push_back(*j);
    }
  }
}

bool FusionSystem::contains_map(std::size_t i, const Table& t) const {
  return std::binary_search(maps_[i].begin(), maps_[i].end(), t);
}

bool FusionSystem::contains(const GroupMorphism& phi) const {
  auto i = lattice_->find(phi.domain());
  if (!i) return false;
  if (!same_group(phi.codomain().parent(), p_group().parent()) || !p_group().contains(phi.codomain()))
    return false;
  return contains_map(*i, phi.images());
}

std::vector<GroupMorphism> FusionSystem::hom_set(const Subgroup& s, const Subgroup& t) const {
  const std::size_t i = lattice_->index_of(s);
  lattice_->index_of(t);
  std::vector<GroupMorphism> out;
  for (std::size_t k = 0; k < maps_[i].size(); ++k)
    if (t.contains((*lattice_)[image_[i][k]])) out.emplace_back(s, t, maps_[i][k]);
  return out;
}

std::vector<GroupMorphism> FusionSystem::automorphisms(std::size_t i) const {
  const Subgroup& s = (*lattice_)[i];
  std::vector<GroupMorphism> out;
  for (std::size_t k = 0; k < maps_[i].size(); ++k)
    if (image_[i][k] == i) out.emplace_back(s, s, maps_[i][k]);
  return out;
}

std::vector<FusionSystem::Table> FusionSystem::isomorphisms(std::size_t i, std::size_t j) const {
  std::vector<Table> out;
  for (std::size_t k = 0; k < maps_[i].size(); ++k)
    if (image_[i][k] == j) out.push_back(maps_[i][k]);
  return out;
}

std::size_t FusionSystem::morphism_count() const {
  std::size_t n = 0;
  for (auto& m : maps_) n += m.size();
  return n;
}

std::size_t FusionSystem::aut_order(std::size_t i) const {
  return static_cast<std::size_t>(std::count(image_[i].begin(), image_[i].end(), i));
}

GroupMorphism FusionSystem::morphism(std::size_t i, std::size_t k) const {
  return GroupMorphism((*lattice_)[i], p_group(), maps_[i][k]);
}

namespace {

LatticePtr ensure_lattice(const Subgroup& p, LatticePtr lattice) {
  if (lattice) {
    if (!(lattice->top() == p)) throw FusionError(ErrorKind::DifferentUnderlyingGroup, "lattice is for another P");
    return lattice;
  }
  return std::make_shared<const SubgroupLattice>(p);
}

std::size_t infer_prime(const Subgroup& p, std::size_t prime) {
  if (!is_prime(prime)) throw FusionError(ErrorKind::InvalidInput, "p must be prime");
  if (!is_p_group(p, prime)) throw FusionError(ErrorKind::NotPSubgroup, "P is not a p-group");
  return prime;
}

}  // namespace

FusionSystem fusion_system_of_group(const Subgroup& g, const Subgroup& p, std::size_t prime,
                                    LatticePtr lattice) {
  require_same_parent(g, p, "fusion_system_of_group");
  infer_prime(p, prime);
  if (!g.contains(p)) throw FusionError(ErrorKind::NotPSubgroup, "P is not contained in G");
  lattice = ensure_lattice(p, std::move(lattice));
  const FiniteGroup& G = g.group();
  std::vector<std::vector<FusionSystem::Table>> maps(lattice->size());
  for (std::size_t i = 0; i < lattice->size(); ++i) {
    const Subgroup& s = (*lattice)[i];
    std::set<FusionSystem::Table> found;
    FusionSystem::Table t(s.order());
    for (Elem x : g.members()) {
      bool ok = true;
      for (std::size_t k = 0; k < s.order() && ok; ++k) {
        t[k] = G.conj(x, s.members()[k]);
        ok = p.contains(t[k]);
      }
      if (ok) found.insert(t);
    }
    maps[i].assign(found.begin(), found.end());
  }
  Provenance prov;
  prov.kind = ProvenanceKind::from_group;
  prov.group = g;
  prov.sylow = is_sylow(g, p, prime);
  const std::string gl = G.label().empty() ? "G" : G.label();
  prov.description = "F_P(" + (g.order() == G.order() ? gl : "subgroup of " + gl) + ")";
  return FusionSystem(prime, std::move(lattice), std::move(maps), std::move(prov));
}

FusionSystem fusion_system_of_group(const GroupPtr& g, const Subgroup& p, std::size_t prime) {
  if (!same_group(g, p.parent())) throw FusionError(ErrorKind::NotPSubgroup, "P does not live in G");
  return fusion_system_of_group(Subgroup::whole(p.parent()), p, prime);
}

FusionSystem universal_fusion_system(const Subgroup& p, std::size_t prime, LatticePtr lattice) {
  infer_prime(p, prime);
  lattice = ensure_lattice(p, std::move(lattice));
  std::vector<std::vector<FusionSystem::Table>> maps(lattice->size());
  for (std::size_t i = 0; i < lattice->size(); ++i)
    for (auto& m : all_injective_homs((*lattice)[i], p)) maps[i].push_back(m.images());
  Provenance prov;
  prov.kind = ProvenanceKind::universal;
  prov.description = "U(P)";
  return FusionSystem(prime, std::move(lattice), std::move(maps), std::move(prov));
}

FusionSystem generated_fusion_system(const Subgroup& p, std::size_t prime,
                                     const std::vector<GroupMorphism>& seed, LatticePtr lattice) {
  infer_prime(p, prime);
  lattice = ensure_lattice(p, std::move(lattice));
  const SubgroupLattice& L = *lattice;
  const std::size_t n = p.order();
  constexpr std::size_t kOff = SubgroupLattice::npos;

  // Generating isomorphisms as partial maps on P positions.
  struct Gen {
    std::vector<std::size_t> map;  // position -> position, kOff outside the domain
  };
  std::vector<Gen> gens;
  std::set<std::vector<std::size_t>> seen_gens;
  auto add_gen = [&](const Subgroup& dom, const std::vector<Elem>& images) {
    Gen g{std::vector<std::size_t>(n, kOff)};
    for (std::size_t k = 0; k < dom.order(); ++k) g.map[L.local(dom.members()[k])] = L.local(images[k]);
    if (seen_gens.insert(g.map).second) gens.push_back(std::move(g));
  };
  for (const GroupMorphism& phi : seed) {
    if (!same_group(phi.domain().parent(), p.parent()) || !p.contains(phi.domain()))
      throw FusionError(ErrorKind::ForeignSubgroup, "seed domain is not inside P");
    for (Elem y : phi.images())
      if (L.local(y) == kOff) throw FusionError(ErrorKind::ForeignSubgroup, "seed image is not inside P");
    add_gen(phi.domain(), phi.images());
    const GroupMorphism inv = phi.inverse();
    add_gen(inv.domain(), inv.images());
  }
  for (Elem g : generating_set(p)) add_gen(p, hom_from_conjugation(g, p, p).images());

  std::vector<std::vector<FusionSystem::Table>> maps(L.size());
  for (std::size_t i = 0; i < L.size(); ++i) {
    const Subgroup& s = L[i];
    std::vector<std::size_t> start(s.order());
    for (std::size_t k = 0; k < s.order(); ++k) start[k] = L.local(s.members()[k]);
    std::set<std::vector<std::size_t>> visited{start};
    std::deque<std::vector<std::size_t>> queue{start};
    while (!queue.empty()) {
      const auto cur = std::move(queue.front());
      queue.pop_front();
      for (const Gen& g : gens) {
        std::vector<std::size_t> next(cur.size());
        bool ok = true;
        for (std::size_t k = 0; k < cur.size() && ok; ++k) {
          next[k] = g.map[cur[k]];
          ok = next[k] != kOff;
        }
        if (ok && visited.insert(next).second) queue.push_back(std::move(next));
      }
    }
    maps[i].reserve(visited.size());
    for (const auto& v : visited) {
      FusionSystem::Table t(v.size());
      for (std::size_t k = 0; k < v.size(); ++k) t[k] = p.members()[v[k]];
      maps[i].push_back(std::move(t));
    }
  }
  Provenance prov;
  prov.kind = ProvenanceKind::generated;
  prov.description = seed.empty() ? "F_P(P)" : "generated";
  return FusionSystem(prime, std::move(lattice), std::move(maps), std::move(prov));
}

FusionSystem trivial_fusion_system(const Subgroup& p, std::size_t prime, LatticePtr lattice) {
  return generated_fusion_system(p, prime, {}, std::move(lattice));
}

std::vector<GroupMorphism> hom_set(const FusionSystem& f, const Subgroup& s, const Subgroup& t) {
  return f.hom_set(s, t);
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

FConjugacyPartition f_conjugacy(const FusionSystem& f) {
  const SubgroupLattice& L = f.lattice();
  FConjugacyPartition out;

  UnionFind sub(L.size());
  for (std::size_t i = 0; i < L.size(); ++i)
    for (std::size_t k = 0; k < f.maps_from(i).size(); ++k) sub.unite(i, f.image_index(i, k));
  out.subgroup_class_of.assign(L.size(), 0);
  {
    std::vector<std::size_t> class_id(L.size(), SubgroupLattice::npos);
    for (std::size_t i = 0; i < L.size(); ++i) {
      const std::size_t r = sub.find(i);
      if (class_id[r] == SubgroupLattice::npos) {
        class_id[r] = out.subgroup_classes.size();
        out.subgroup_classes.emplace_back();
      }
      out.subgroup_classes[class_id[r]].push_back(i);
      out.subgroup_class_of[i] = class_id[r];
    }
  }
  for (const auto& cls : out.subgroup_classes) {
    std::size_t best = cls.front();
    for (std::size_t i : cls)
      if (L[L.normalizer(i)].order() > L[L.normalizer(best)].order()) best = i;
    out.representatives.push_back(best);
  }

  const Subgroup& p = f.p_group();
  UnionFind el(p.order());
  for (std::size_t a = 0; a < p.order(); ++a) {
    const Elem x = p.members()[a];
    const std::vector<Elem> one{x};
    const std::size_t c = L.index_of(generate_subgroup(p.parent(), one));
    const std::size_t pos = *L[c].position(x);
    for (const auto& t : f.maps_from(c)) el.unite(a, L.local(t[pos]));
  }
  out.element_class_of.assign(p.order(), 0);
  std::vector<std::size_t> class_id(p.order(), SubgroupLattice::npos);
  for (std::size_t a = 0; a < p.order(); ++a) {
    const std::size_t r = el.find(a);
    if (class_id[r] == SubgroupLattice::npos) {
      class_id[r] = out.element_classes.size();
      out.element_classes.emplace_back();
    }
    out.element_classes[class_id[r]].push_back(p.members()[a]);
    out.element_class_of[a] = class_id[r];
  }
  return out;
}

FusionSystem transport(const FusionSystem& f, const GroupMorphism& alpha, LatticePtr target) {
  const Subgroup& p = f.p_group();
  if (!(alpha.domain() == p) || alpha.image().order() != p.order())
    throw FusionError(ErrorKind::NotIsomorphism, "transport needs an isomorphism defined on P");
  const Subgroup q = alpha.image();
  target = ensure_lattice(q, std::move(target));
  const SubgroupLattice& L = f.lattice();
  const SubgroupLattice& M = *target;
  // alpha on P positions, and its inverse on P' positions.
  std::vector<Elem> fwd(p.order());
  std::vector<Elem> back(q.order());
  for (std::size_t k = 0; k < p.order(); ++k) {
    fwd[k] = alpha.images()[k];
    back[*q.position(fwd[k])] = p.members()[k];
  }
  std::vector<std::vector<FusionSystem::Table>> maps(M.size());
  for (std::size_t i = 0; i < L.size(); ++i) {
    const Subgroup& s = L[i];
    const Subgroup s2 = alpha.image(s);
    const std::size_t j = M.index_of(s2);
    for (const auto& t : f.maps_from(i)) {
      FusionSystem::Table u(s2.order());
      for (std::size_t k = 0; k < s2.order(); ++k) {
        const Elem x = back[*q.position(s2.members()[k])];
        u[k] = fwd[L.local(t[*s.position(x)])];
      }
      maps[j].push_back(std::move(u));
    }
  }
  Provenance prov = f.provenance();
  prov.notes.push_back("transported along an isomorphism");
  return FusionSystem(f.prime(), std::move(target), std::move(maps), std::move(prov));
}

namespace {

void require_same_p(const FusionSystem& a, const FusionSystem& b) {
  if (!same_group(a.p_group().parent(), b.p_group().parent()) || !(a.p_group() == b.p_group()))
    throw FusionError(ErrorKind::DifferentUnderlyingGroup, "fusion systems live on different groups");
}

}  // namespace

bool subsystem_equal(const FusionSystem& a, const FusionSystem& b) {
  require_same_p(a, b);
  for (std::size_t i = 0; i < a.lattice().size(); ++i)
    if (a.maps_from(i) != b.maps_from(i)) return false;
  return true;
}

bool subsystem_leq(const FusionSystem& a, const FusionSystem& b) {
  require_same_p(a, b);
  for (std::size_t i = 0; i < a.lattice().size(); ++i)
    if (!std::includes(b.maps_from(i).begin(), b.maps_from(i).end(), a.maps_from(i).begin(),
                       a.maps_from(i).end()))
      return false;
  return true;
}

AxiomAudit audit_axioms(const FusionSystem& f) {
  const SubgroupLattice& L = f.lattice();
  const Subgroup& p = f.p_group();
  const FiniteGroup& G = p.group();
  AxiomAudit audit;
  auto fail = [&](std::string why) {
    audit.ok = false;
    audit.failure = std::move(why);
    return audit;
  };
  for (std::size_t i = 0; i < L.size(); ++i) {
    const Subgroup& s = L[i];
    // Conjugation by P.
    for (Elem g : p.members()) {
      FusionSystem::Table t(s.order());
      for (std::size_t k = 0; k < s.order(); ++k) t[k] = G.conj(g, s.members()[k]);
      if (!f.contains_map(i, t)) return fail("missing a P-conjugation on subgroup " + std::to_string(i));
    }
    for (std::size_t k = 0; k < f.maps_from(i).size(); ++k) {
      const auto& t = f.maps_from(i)[k];
      const std::size_t r = f.image_index(i, k);
      const Subgroup& img = L[r];
      // Homomorphism and injectivity were fixed when the table was built;
      // recheck the law here.
      for (std::size_t a = 0; a < s.order(); ++a)
        for (std::size_t b = 0; b < s.order(); ++b)
          if (t[*s.position(G.mul(s.members()[a], s.members()[b]))] != G.mul(t[a], t[b]))
            return fail("stored map is not a homomorphism");
      // Inverse.
      FusionSystem::Table inv(img.order());
      for (std::size_t a = 0; a < s.order(); ++a) inv[*img.position(t[a])] = s.members()[a];
      if (!f.contains_map(r, inv)) return fail("missing inverse of a map from subgroup " + std::to_string(i));
      // Composition with everything leaving the image.
      for (const auto& u : f.maps_from(r)) {
        FusionSystem::Table c(s.order());
        for (std::size_t a = 0; a < s.order(); ++a) c[a] = u[*img.position(t[a])];
        if (!f.contains_map(i, c)) return fail("composition not closed at subgroup " + std::to_string(i));
      }
      // Restriction.
      for (std::size_t j : L.below(i)) {
        const Subgroup& sub = L[j];
        FusionSystem::Table c(sub.order());
        for (std::size_t a = 0; a < sub.order(); ++a) c[a] = t[*s.position(sub.members()[a])];
        if (!f.contains_map(j, c)) return fail("restriction not closed at subgroup " + std::to_string(j));
      }
    }
  }
  return audit;
}

}  // namespace fusion
