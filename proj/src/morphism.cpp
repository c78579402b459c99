#include "fusion/morphism.hpp"

#include <algorithm>
#include <set>

#include "fusion/config.hpp"
#include "fusion/error.hpp"
#include "hom_search.hpp"

namespace fusion {

GroupMorphism::GroupMorphism(Subgroup domain, Subgroup codomain, std::vector<Elem> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {}

GroupMorphism GroupMorphism::checked(Subgroup domain, Subgroup codomain, std::vector<Elem> images) {
  if (images.size() != domain.order())
    throw FusionError(ErrorKind::InvalidInput, "morphism table size differs from domain order");
  const auto dm = domain.members();
  const FiniteGroup& src = domain.group();
  const FiniteGroup& dst = codomain.group();
  std::set<Elem> seen;
  for (Elem y : images) {
    if (y >= dst.order() || !codomain.contains(y))
      throw FusionError(ErrorKind::InvalidInput, "morphism image leaves the codomain");
    if (!seen.insert(y).second) throw FusionError(ErrorKind::InvalidInput, "morphism is not injective");
  }
  for (std::size_t i = 0; i < dm.size(); ++i)
    for (std::size_t j = 0; j < dm.size(); ++j) {
      const auto k = domain.position(src.mul(dm[i], dm[j]));
      if (images[*k] != dst.mul(images[i], images[j]))
        throw FusionError(ErrorKind::InvalidInput, "map is not a homomorphism");
    }
  return GroupMorphism(std::move(domain), std::move(codomain), std::move(images));
}

GroupMorphism GroupMorphism::from_generator_images(Subgroup domain, Subgroup codomain,
                                                   const std::vector<std::pair<Elem, Elem>>& pairs) {
  const FiniteGroup& src = domain.group();
  const FiniteGroup& dst = codomain.group();
  std::vector<Elem> images(domain.order(), 0);
  std::vector<char> set(domain.order(), 0);
  for (auto [a, b] : pairs) {
    if (a >= src.order() || !domain.contains(a)) throw FusionError(ErrorKind::InvalidInput, "generator outside the domain");
    if (b >= dst.order()) throw FusionError(ErrorKind::InvalidInput, "image out of range");
  }
  std::vector<Elem> queue{FiniteGroup::identity()};
  set[*domain.position(FiniteGroup::identity())] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const Elem x = queue[h];
    const Elem y = images[*domain.position(x)];
    for (auto [a, b] : pairs) {
      const Elem xa = src.mul(x, a);
      const Elem yb = dst.mul(y, b);
      const std::size_t k = *domain.position(xa);
      if (set[k]) {
        if (images[k] != yb) throw FusionError(ErrorKind::InvalidInput, "generator images do not define a homomorphism");
        continue;
      }
      set[k] = 1;
      images[k] = yb;
      queue.push_back(xa);
    }
  }
  if (queue.size() != domain.order()) throw FusionError(ErrorKind::InvalidInput, "generators do not generate the domain");
  return checked(std::move(domain), std::move(codomain), std::move(images));
}

GroupMorphism GroupMorphism::from_pairs(Subgroup domain, Subgroup codomain,
                                        const std::vector<std::pair<Elem, Elem>>& pairs) {
  std::vector<Elem> images(domain.order(), 0);
  std::vector<char> set(domain.order(), 0);
  for (auto [a, b] : pairs) {
    if (a >= domain.group().order()) throw FusionError(ErrorKind::InvalidInput, "pair source out of range");
    auto k = domain.position(a);
    if (!k) throw FusionError(ErrorKind::InvalidInput, "pair source outside the domain");
    if (set[*k] && images[*k] != b) throw FusionError(ErrorKind::InvalidInput, "pair source repeated");
    images[*k] = b;
    set[*k] = 1;
  }
  if (std::count(set.begin(), set.end(), 0) != 0)
    throw FusionError(ErrorKind::InvalidInput, "pairs do not cover the domain");
  return checked(std::move(domain), std::move(codomain), std::move(images));
}

GroupMorphism GroupMorphism::identity(const Subgroup& s) {
  return GroupMorphism(s, s, std::vector<Elem>(s.members().begin(), s.members().end()));
}

Elem GroupMorphism::operator()(Elem x) const { return images_[*domain_.position(x)]; }

Subgroup GroupMorphism::image(const Subgroup& s) const {
  std::vector<Elem> out;
  out.reserve(s.order());
  for (Elem x : s.members()) out.push_back((*this)(x));
  return Subgroup(codomain_.parent(), std::move(out));
}

Subgroup GroupMorphism::image() const { return Subgroup(codomain_.parent(), images_); }

bool GroupMorphism::is_identity() const {
  if (!same_group(domain_.parent(), codomain_.parent())) return false;
  return std::equal(images_.begin(), images_.end(), domain_.members().begin());
}

bool GroupMorphism::is_automorphism() const {
  return same_group(domain_.parent(), codomain_.parent()) && domain_ == codomain_ &&
         image() == domain_;
}

GroupMorphism GroupMorphism::restrict_to(const Subgroup& s) const {
  if (!domain_.contains(s))
    throw FusionError(ErrorKind::ForeignSubgroup, "restriction to a subgroup outside the domain");
  std::vector<Elem> out;
  out.reserve(s.order());
  for (Elem x : s.members()) out.push_back((*this)(x));
  return GroupMorphism(s, codomain_, std::move(out));
}

GroupMorphism GroupMorphism::corestrict(const Subgroup& t) const {
  for (Elem y : images_)
    if (!t.contains(y)) throw FusionError(ErrorKind::ImageNotContained, "corestriction misses the image");
  return GroupMorphism(domain_, t, images_);
}

GroupMorphism GroupMorphism::inverse() const {
  Subgroup im = image();
  std::vector<Elem> out(im.order());
  const auto dm = domain_.members();
  for (std::size_t i = 0; i < dm.size(); ++i) out[*im.position(images_[i])] = dm[i];
  return GroupMorphism(im, domain_, std::move(out));
}

bool operator==(const GroupMorphism& a, const GroupMorphism& b) {
  return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.images_ == b.images_;
}

std::strong_ordering operator<=>(const GroupMorphism& a, const GroupMorphism& b) {
  if (auto c = a.domain_ <=> b.domain_; c != 0) return c;
  if (auto c = a.codomain_ <=> b.codomain_; c != 0) return c;
  return a.images_ <=> b.images_;
}

GroupMorphism compose(const GroupMorphism& outer, const GroupMorphism& inner) {
  std::vector<Elem> out;
  out.reserve(inner.images().size());
  for (Elem y : inner.images()) {
    if (!outer.domain().contains(y))
      throw FusionError(ErrorKind::ImageNotContained, "composition: image outside the next domain");
    out.push_back(outer(y));
  }
  return GroupMorphism(inner.domain(), outer.codomain(), std::move(out));
}

GroupMorphism hom_from_conjugation(Elem g, const Subgroup& s, const Subgroup& t) {
  require_same_parent(s, t, "hom_from_conjugation");
  const FiniteGroup& G = s.group();
  if (g >= G.order()) throw FusionError(ErrorKind::InvalidInput, "conjugating element out of range");
  std::vector<Elem> out;
  out.reserve(s.order());
  for (Elem x : s.members()) {
    const Elem y = G.conj(g, x);
    if (!t.contains(y)) throw FusionError(ErrorKind::ImageNotContained, "conjugate of S not inside T");
    out.push_back(y);
  }
  return GroupMorphism(s, t, std::move(out));
}

std::vector<GroupMorphism> hom_P(const Subgroup& p, const Subgroup& s, const Subgroup& t) {
  require_same_parent(p, s, "hom_P");
  require_same_parent(p, t, "hom_P");
  const FiniteGroup& G = p.group();
  std::set<std::vector<Elem>> tables;
  for (Elem g : p.members()) {
    std::vector<Elem> out;
    out.reserve(s.order());
    bool ok = true;
    for (Elem x : s.members()) {
      const Elem y = G.conj(g, x);
      if (!t.contains(y)) {
        ok = false;
        break;
      }
      out.push_back(y);
    }
    if (ok) tables.insert(std::move(out));
  }
  std::vector<GroupMorphism> result;
  for (auto& tab : tables) result.emplace_back(s, t, tab);
  return result;
}

std::vector<GroupMorphism> all_injective_homs(const Subgroup& s, const Subgroup& t) {
  if (s.order() > caps().map_domain)
    throw FusionError(ErrorKind::MapCapExceeded, "map enumeration limited to domains of order " +
                                                     std::to_string(caps().map_domain));
  std::vector<std::vector<Elem>> tables;
  detail::for_each_injective_hom(s, t, [&](const std::vector<Elem>& im) {
    tables.push_back(im);
    return true;
  });
  std::sort(tables.begin(), tables.end());
  std::vector<GroupMorphism> result;
  result.reserve(tables.size());
  for (auto& tab : tables) result.emplace_back(s, t, std::move(tab));
  return result;
}

std::vector<GroupMorphism> automorphisms(const Subgroup& q) { return all_injective_homs(q, q); }

namespace {

Permutation as_position_permutation(const GroupMorphism& a) {
  const auto& q = a.domain();
  std::vector<Point> img(q.order());
  for (std::size_t i = 0; i < q.order(); ++i) img[i] = static_cast<Point>(*q.position(a.images()[i]));
  return Permutation(std::move(img));
}

}  // namespace

Elem RealizedAutGroup::element_of(const GroupMorphism& aut) const {
  auto e = carrier->index_of(as_position_permutation(aut));
  if (!e) throw FusionError(ErrorKind::NotAutomorphism, "automorphism not in the realized group");
  return *e;
}

std::vector<Elem> RealizedAutGroup::elements_of(const std::vector<GroupMorphism>& auts) const {
  std::vector<Elem> out;
  out.reserve(auts.size());
  for (auto& a : auts) out.push_back(element_of(a));
  return out;
}

Quotient RealizedAutGroup::out() const { return quotient_group(Subgroup::whole(carrier), inner); }

RealizedAutGroup realize_aut_group(const Subgroup& q, const std::vector<GroupMorphism>& auts) {
  std::vector<Permutation> gens;
  for (auto& a : auts) {
    if (!(a.domain() == q) || !(a.codomain() == q) || !a.is_automorphism())
      throw FusionError(ErrorKind::NotAutomorphism, "realize_aut_group: map is not an automorphism of Q");
    gens.push_back(as_position_permutation(a));
  }
  std::vector<Permutation> inner_gens;
  for (Elem g : generating_set(q)) inner_gens.push_back(as_position_permutation(hom_from_conjugation(g, q, q)));
  gens.insert(gens.end(), inner_gens.begin(), inner_gens.end());

  RealizedAutGroup r;
  r.base = q;
  r.carrier = FiniteGroup::generate(q.order(), gens, "Aut");
  std::vector<Elem> inner_elems;
  for (auto& p : inner_gens) inner_elems.push_back(*r.carrier->index_of(p));
  r.inner = generate_subgroup(r.carrier, inner_elems);
  r.tagging.reserve(r.carrier->order());
  for (const Permutation& p : r.carrier->elements()) {
    std::vector<Elem> img(q.order());
    for (std::size_t i = 0; i < q.order(); ++i) img[i] = q.members()[p[i]];
    r.tagging.emplace_back(q, q, std::move(img));
  }
  return r;
}

Permutation left_regular(const GroupPtr& h, Elem x) {
  std::vector<Point> img(h->order());
  for (Elem y = 0; y < h->order(); ++y) img[y] = h->mul(x, y);
  return Permutation(std::move(img));
}

Permutation regular_embedding_conjugator(const GroupPtr& h, const GroupMorphism& phi) {
  const Subgroup& x = phi.domain();
  const Subgroup& y = phi.codomain();
  if (!same_group(x.parent(), h) || !same_group(y.parent(), h))
    throw FusionError(ErrorKind::NotIsomorphism, "morphism does not live in H");
  if (x.order() != y.order() || !(phi.image() == y))
    throw FusionError(ErrorKind::NotIsomorphism, "morphism is not onto its codomain");
  {
    std::set<Elem> seen(phi.images().begin(), phi.images().end());
    if (seen.size() != x.order()) throw FusionError(ErrorKind::NotIsomorphism, "morphism is not injective");
    for (Elem a : x.members())
      for (Elem b : x.members())
        if (phi(h->mul(a, b)) != h->mul(phi(a), phi(b)))
          throw FusionError(ErrorKind::NotIsomorphism, "map is not a homomorphism");
  }

  // Right coset representatives of X and of Y, in element order.
  auto right_reps = [&](const Subgroup& s) {
    std::vector<Elem> reps;
    std::vector<char> covered(h->order(), 0);
    for (Elem t = 0; t < h->order(); ++t) {
      if (covered[t]) continue;
      reps.push_back(t);
      for (Elem a : s.members()) covered[h->mul(a, t)] = 1;
    }
    return reps;
  };
  const auto xt = right_reps(x);
  const auto yu = right_reps(y);

  // phihat(a t_i) = phi(a) u_i.
  std::vector<Point> img(h->order());
  for (std::size_t i = 0; i < xt.size(); ++i)
    for (Elem a : x.members()) img[h->mul(a, xt[i])] = h->mul(phi(a), yu[i]);
  Permutation hat(std::move(img));

  const Permutation hat_inv = hat.inverse();
  for (Elem a : x.members())
    if (!(hat * left_regular(h, a) * hat_inv == left_regular(h, phi(a))))
      throw FusionError(ErrorKind::NotIsomorphism, "conjugator failed verification");
  return hat;
}

}  // namespace fusion
