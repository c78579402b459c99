#include "fusion/subgroups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "fusion/error.hpp"
#include "fusion/numbers.hpp"
#include "hom_search.hpp"

namespace fusion {

namespace {

struct MaskHash {
  std::size_t operator()(const std::vector<std::uint64_t>& m) const noexcept {
    std::size_t h = 0;
    for (auto w : m) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

/// Closed subset of a group together with a generating sequence.
struct Span {
  std::vector<Elem> members;
  std::vector<Elem> gens;
  std::vector<std::uint64_t> mask;

  bool has(Elem e) const { return (mask[e >> 6] >> (e & 63)) & 1u; }
  void add(Elem e) {
    mask[e >> 6] |= std::uint64_t{1} << (e & 63);
    members.push_back(e);
  }
};

Span trivial_span(const FiniteGroup& g) {
  Span s;
  s.mask.assign((g.order() + 63) / 64, 0);
  s.add(FiniteGroup::identity());
  return s;
}

/// <base, x> computed as a union of left cosets of base.
Span extend_span(const FiniteGroup& g, const Span& base, Elem x) {
  Span out = base;
  out.gens.push_back(x);
  std::vector<Elem> reps{FiniteGroup::identity()};
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const Elem r = reps[i];
    for (Elem s : out.gens) {
      const Elem t = g.mul(s, r);
      if (out.has(t)) continue;
      for (Elem k : base.members) out.add(g.mul(t, k));
      reps.push_back(t);
    }
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

Span span_of(const FiniteGroup& g, std::span<const Elem> gens) {
  Span s = trivial_span(g);
  for (Elem x : gens)
    if (!s.has(x)) s = extend_span(g, s, x);
  return s;
}

Subgroup to_subgroup(const GroupPtr& g, Span s) { return Subgroup(g, std::move(s.members)); }

/// Orbit of x under conjugation by the generators of H.
std::vector<Elem> conjugation_orbit(const FiniteGroup& g, const std::vector<Elem>& hgens, Elem x) {
  std::vector<Elem> orbit{x};
  std::vector<bool> seen(g.order(), false);
  seen[x] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (Elem h : hgens) {
      const Elem y = g.conj(h, orbit[i]);
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

bool coprime_order(const FiniteGroup& g, Elem x, std::size_t p) { return g.element_order(x) % p != 0; }

}  // namespace

Subgroup generate_subgroup(const GroupPtr& group, std::span<const Elem> gens) {
  return to_subgroup(group, span_of(*group, gens));
}

Subgroup extend_subgroup(const Subgroup& base, std::span<const Elem> extra) {
  std::vector<Elem> gens = generating_set(base);
  gens.insert(gens.end(), extra.begin(), extra.end());
  return generate_subgroup(base.parent(), gens);
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b, "join");
  if (a.contains(b)) return a;
  if (b.contains(a)) return b;
  std::vector<Elem> gens = generating_set(a);
  const auto gb = generating_set(b);
  gens.insert(gens.end(), gb.begin(), gb.end());
  return generate_subgroup(a.parent(), gens);
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b, "intersection");
  std::vector<Elem> out;
  for (Elem e : a.members())
    if (b.contains(e)) out.push_back(e);
  return Subgroup(a.parent(), std::move(out));
}

Subgroup conjugate(Elem g, const Subgroup& s) {
  std::vector<Elem> out;
  out.reserve(s.order());
  for (Elem e : s.members()) out.push_back(s.group().conj(g, e));
  return Subgroup(s.parent(), std::move(out));
}

std::vector<Elem> generating_set(const Subgroup& s) {
  const FiniteGroup& g = s.group();
  Span cur = trivial_span(g);
  while (cur.members.size() < s.order()) {
    Elem best = 0;
    std::size_t best_order = 0;
    for (Elem e : s.members())
      if (!cur.has(e) && g.element_order(e) > best_order) {
        best = e;
        best_order = g.element_order(e);
      }
    cur = extend_span(g, cur, best);
  }
  return cur.gens;
}

Subgroup centralizer(const Subgroup& h, const Subgroup& s) {
  require_same_parent(h, s, "centralizer");
  const FiniteGroup& g = h.group();
  const auto gens = generating_set(s);
  std::vector<Elem> out;
  for (Elem x : h.members()) {
    bool ok = true;
    for (Elem t : gens)
      if (g.mul(x, t) != g.mul(t, x)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return Subgroup(h.parent(), std::move(out));
}

Subgroup normalizer(const Subgroup& h, const Subgroup& s) {
  require_same_parent(h, s, "normalizer");
  const FiniteGroup& g = h.group();
  const auto gens = generating_set(s);
  std::vector<Elem> out;
  for (Elem x : h.members()) {
    bool ok = true;
    for (Elem t : gens)
      if (!s.contains(g.conj(x, t))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return Subgroup(h.parent(), std::move(out));
}

Subgroup centralizer(const GroupPtr& g, const Subgroup& s) { return centralizer(Subgroup::whole(g), s); }
Subgroup normalizer(const GroupPtr& g, const Subgroup& s) { return normalizer(Subgroup::whole(g), s); }
Subgroup center(const Subgroup& h) { return centralizer(h, h); }

bool is_normal_in(const Subgroup& h, const Subgroup& n) {
  require_same_parent(h, n, "is_normal_in");
  if (!h.contains(n)) return false;
  const FiniteGroup& g = h.group();
  const auto ng = generating_set(n);
  for (Elem x : generating_set(h))
    for (Elem t : ng)
      if (!n.contains(g.conj(x, t))) return false;
  return true;
}

bool is_abelian(const Subgroup& h) {
  const auto gens = generating_set(h);
  const FiniteGroup& g = h.group();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
  return true;
}

bool is_p_group(const Subgroup& h, std::size_t p) { return is_p_power(h.order(), p); }

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b, "commutator_subgroup");
  const FiniteGroup& g = a.group();
  std::vector<bool> seen(g.order(), false);
  std::vector<Elem> comms;
  for (Elem x : a.members())
    for (Elem y : b.members()) {
      const Elem c = g.commutator(x, y);
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  return generate_subgroup(a.parent(), comms);
}

Subgroup normal_closure(const Subgroup& h, std::span<const Elem> gens) {
  const FiniteGroup& g = h.group();
  const auto hgens = generating_set(h);
  std::vector<Elem> all;
  for (Elem x : gens) {
    auto orbit = conjugation_orbit(g, hgens, x);
    all.insert(all.end(), orbit.begin(), orbit.end());
  }
  return generate_subgroup(h.parent(), all);
}

std::vector<std::vector<Elem>> conjugacy_classes(const Subgroup& h) {
  const FiniteGroup& g = h.group();
  const auto hgens = generating_set(h);
  std::vector<bool> done(g.order(), false);
  std::vector<std::vector<Elem>> out;
  for (Elem x : h.members()) {
    if (done[x]) continue;
    auto orbit = conjugation_orbit(g, hgens, x);
    for (Elem y : orbit) done[y] = true;
    out.push_back(std::move(orbit));
  }
  return out;
}

Subgroup sylow_subgroup(const Subgroup& h, std::size_t p) {
  const FiniteGroup& g = h.group();
  const std::size_t target = p_part(h.order(), p);
  Subgroup cur = Subgroup::trivial(h.parent());
  while (cur.order() < target) {
    const Subgroup n = normalizer(h, cur);
    std::optional<Elem> pick;
    for (Elem x : n.members()) {
      if (cur.contains(x)) continue;
      if (cur.contains(g.power(x, static_cast<long long>(p)))) {
        pick = x;
        break;
      }
    }
    if (!pick) throw FusionError(ErrorKind::InvalidInput, "Sylow growth stalled (not a group?)");
    const Elem x = *pick;
    cur = extend_subgroup(cur, std::span<const Elem>(&x, 1));
  }
  return cur;
}

Subgroup sylow_subgroup(const GroupPtr& g, std::size_t p) { return sylow_subgroup(Subgroup::whole(g), p); }

std::vector<Subgroup> all_sylow_subgroups(const Subgroup& h, std::size_t p) {
  const Subgroup base = sylow_subgroup(h, p);
  std::unordered_map<std::vector<std::uint64_t>, bool, MaskHash> seen;
  std::vector<Subgroup> out;
  for (Elem x : h.members()) {
    Subgroup c = conjugate(x, base);
    if (seen.emplace(c.mask(), true).second) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_sylow(const Subgroup& h, const Subgroup& p_sub, std::size_t p) {
  return h.contains(p_sub) && p_sub.order() == p_part(h.order(), p);
}

std::vector<Subgroup> all_subgroups(const Subgroup& h, std::size_t cap) {
  if (h.order() > cap)
    throw FusionError(ErrorKind::SubgroupCapExceeded,
                      "subgroup enumeration limited to order " + std::to_string(cap) + ", got " +
                          std::to_string(h.order()));
  const FiniteGroup& g = h.group();

  // One generator per cyclic subgroup.
  std::vector<Elem> cyclic_gens;
  {
    std::vector<bool> covered(g.order(), false);
    for (Elem x : h.members()) {
      if (covered[x]) continue;
      // x generates the same cyclic group as every power coprime to its order.
      const std::size_t ord = g.element_order(x);
      Elem y = x;
      for (std::size_t k = 1; k <= ord; ++k) {
        if (std::gcd(k, ord) == 1) covered[y] = true;
        y = g.mul(y, x);
      }
      if (x != FiniteGroup::identity()) cyclic_gens.push_back(x);
    }
  }

  std::vector<Span> nodes{trivial_span(g)};
  std::unordered_map<std::vector<std::uint64_t>, std::size_t, MaskHash> index;
  index.emplace(nodes[0].mask, 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].members.size() == h.order()) continue;
    for (Elem x : cyclic_gens) {
      if (nodes[i].has(x)) continue;
      Span next = extend_span(g, nodes[i], x);
      if (index.find(next.mask) != index.end()) continue;
      index.emplace(next.mask, nodes.size());
      nodes.push_back(std::move(next));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(nodes.size());
  for (auto& n : nodes) out.push_back(to_subgroup(h.parent(), std::move(n)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> normal_subgroups(const Subgroup& h, std::size_t cap) {
  std::vector<Subgroup> out;
  for (auto& s : all_subgroups(h, cap))
    if (is_normal_in(h, s)) out.push_back(std::move(s));
  return out;
}

std::string_view to_string(CharacteristicKind kind) {
  switch (kind) {
    case CharacteristicKind::derived: return "derived";
    case CharacteristicKind::frattini: return "frattini";
    case CharacteristicKind::center: return "center";
    case CharacteristicKind::o_p: return "o_p";
    case CharacteristicKind::o_p_prime: return "o_p_prime";
    case CharacteristicKind::p_residue: return "p_residue";
    case CharacteristicKind::thompson_j: return "thompson_j";
    case CharacteristicKind::omega_1: return "omega_1";
  }
  return "?";
}

std::optional<CharacteristicKind> characteristic_kind_from_string(std::string_view name) {
  for (auto k : {CharacteristicKind::derived, CharacteristicKind::frattini, CharacteristicKind::center,
                 CharacteristicKind::o_p, CharacteristicKind::o_p_prime, CharacteristicKind::p_residue,
                 CharacteristicKind::thompson_j, CharacteristicKind::omega_1})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

Subgroup characteristic_subgroup(const Subgroup& h, CharacteristicKind kind, std::optional<std::size_t> p) {
  const FiniteGroup& g = h.group();
  const bool needs_p = kind == CharacteristicKind::o_p || kind == CharacteristicKind::o_p_prime ||
                       kind == CharacteristicKind::p_residue || kind == CharacteristicKind::omega_1;
  if (needs_p && !p) throw FusionError(ErrorKind::MissingPrime, std::string(to_string(kind)) + " needs a prime");

  switch (kind) {
    case CharacteristicKind::derived:
      return commutator_subgroup(h, h);
    case CharacteristicKind::center:
      return center(h);
    case CharacteristicKind::frattini: {
      const auto subs = all_subgroups(h);
      std::vector<Subgroup> proper(subs.begin(), subs.end() - 1);
      Subgroup result = h;
      for (std::size_t i = 0; i < proper.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = i + 1; j < proper.size() && maximal; ++j)
          if (proper[j].order() > proper[i].order() && proper[j].contains(proper[i])) maximal = false;
        if (maximal) result = intersection(result, proper[i]);
      }
      return result;
    }
    case CharacteristicKind::o_p:
    case CharacteristicKind::o_p_prime: {
      // Union of all normal subgroups of the requested kind: an element lies
      // in one iff its normal closure is of that kind.
      std::vector<Elem> keep;
      for (const auto& cls : conjugacy_classes(h)) {
        const Subgroup nc = normal_closure(h, std::span<const Elem>(&cls.front(), 1));
        const bool is_p = is_p_power(nc.order(), *p);
        const bool is_pprime = nc.order() % *p != 0;
        if ((kind == CharacteristicKind::o_p && is_p) || (kind == CharacteristicKind::o_p_prime && is_pprime))
          keep.insert(keep.end(), cls.begin(), cls.end());
      }
      return generate_subgroup(h.parent(), keep);
    }
    case CharacteristicKind::p_residue: {
      std::vector<Elem> keep;
      for (Elem x : h.members())
        if (coprime_order(g, x, *p)) keep.push_back(x);
      return generate_subgroup(h.parent(), keep);
    }
    case CharacteristicKind::thompson_j: {
      const auto subs = all_subgroups(h);
      std::size_t best = 0;
      std::vector<Elem> keep;
      for (const auto& s : subs) {
        if (!is_abelian(s)) continue;
        if (s.order() > best) {
          best = s.order();
          keep.clear();
        }
        if (s.order() == best) keep.insert(keep.end(), s.members().begin(), s.members().end());
      }
      return generate_subgroup(h.parent(), keep);
    }
    case CharacteristicKind::omega_1: {
      std::vector<Elem> keep;
      for (Elem x : h.members())
        if (*p % g.element_order(x) == 0) keep.push_back(x);
      return generate_subgroup(h.parent(), keep);
    }
  }
  throw FusionError(ErrorKind::InvalidInput, "unknown characteristic kind");
}

Subgroup characteristic_subgroup(const GroupPtr& g, CharacteristicKind kind, std::optional<std::size_t> p) {
  return characteristic_subgroup(Subgroup::whole(g), kind, p);
}

Subgroup Quotient::project(const Subgroup& s) const {
  std::vector<Elem> out;
  for (Elem x : s.members()) out.push_back(projection[x]);
  return Subgroup(group, std::move(out));
}

Subgroup Quotient::preimage(const Subgroup& sbar, const Subgroup& h) const {
  std::vector<Elem> out;
  for (Elem x : h.members())
    if (sbar.contains(projection[x])) out.push_back(x);
  return Subgroup(h.parent(), std::move(out));
}

Quotient quotient_group(const Subgroup& h, const Subgroup& n) {
  require_same_parent(h, n, "quotient_group");
  if (!is_normal_in(h, n)) throw FusionError(ErrorKind::NotNormal, "quotient by a non-normal subgroup");
  const FiniteGroup& g = h.group();

  constexpr Elem kUnset = Quotient::kOutside;
  std::vector<Elem> coset_of(g.order(), kUnset);
  std::vector<Elem> reps;
  for (Elem x : h.members()) {
    if (coset_of[x] != kUnset) continue;
    const auto id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem m : n.members()) coset_of[g.mul(x, m)] = id;
  }
  const std::size_t k = reps.size();
  auto action = [&](Elem x) {
    std::vector<Point> im(k);
    for (std::size_t c = 0; c < k; ++c) im[c] = coset_of[g.mul(x, reps[c])];
    return Permutation(std::move(im));
  };
  std::vector<Permutation> gens;
  for (Elem x : generating_set(h)) gens.push_back(action(x));
  std::string label;
  if (!g.label().empty()) label = g.label() + "/N";
  Quotient q;
  q.group = FiniteGroup::generate(k, std::move(gens), std::move(label));
  std::vector<Elem> image_of_coset(k);
  for (std::size_t c = 0; c < k; ++c) image_of_coset[c] = *q.group->index_of(action(reps[c]));
  q.projection.assign(g.order(), Quotient::kOutside);
  for (Elem x : h.members()) q.projection[x] = image_of_coset[coset_of[x]];
  return q;
}

std::string_view to_string(FusionVerdict v) {
  switch (v) {
    case FusionVerdict::conjugate_in_H: return "conjugate_in_H";
    case FusionVerdict::fused: return "fused";
    case FusionVerdict::not_conjugate: return "not_conjugate";
  }
  return "?";
}

FusionVerdict are_fused(const Subgroup& h, const Subgroup& g, Elem x, Elem y) {
  require_same_parent(h, g, "are_fused");
  if (!h.contains(x) || !h.contains(y)) throw FusionError(ErrorKind::ElementOutsideH, "x and y must lie in H");
  if (!g.contains(h)) throw FusionError(ErrorKind::ContainmentViolated, "H must be a subgroup of G");
  const FiniteGroup& grp = h.group();
  for (Elem t : h.members())
    if (grp.conj(t, x) == y) return FusionVerdict::conjugate_in_H;
  for (Elem t : g.members())
    if (grp.conj(t, x) == y) return FusionVerdict::fused;
  return FusionVerdict::not_conjugate;
}

GroupPtr as_group(const Subgroup& s, std::string label) {
  std::vector<Permutation> gens;
  for (Elem x : generating_set(s)) gens.push_back(s.group().element(x));
  return FiniteGroup::generate(s.group().degree(), std::move(gens), std::move(label));
}

std::vector<std::size_t> order_census(const Subgroup& s) {
  std::vector<std::size_t> out;
  out.reserve(s.order());
  for (Elem x : s.members()) out.push_back(s.group().element_order(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Elem>> find_isomorphism(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (order_census(a) != order_census(b)) return std::nullopt;
  std::optional<std::vector<Elem>> found;
  detail::for_each_injective_hom(a, b, [&](const std::vector<Elem>& images) {
    found = images;
    return false;
  });
  return found;
}

bool are_isomorphic(const Subgroup& a, const Subgroup& b) { return find_isomorphism(a, b).has_value(); }

bool has_section_isomorphic(const Subgroup& g, const Subgroup& h) {
  if (h.order() > g.order() || g.order() % h.order() != 0) return false;
  if (g.order() > caps().group_order)
    throw FusionError(ErrorKind::OrderCapExceeded, "section search beyond the group order cap");
  if (g.order() == h.order()) return are_isomorphic(g, h);
  const auto target = order_census(h);
  const auto subs = all_subgroups(g, caps().group_order);
  for (const auto& k : subs) {
    if (k.order() % h.order() != 0) continue;
    const std::size_t n_order = k.order() / h.order();
    for (const auto& n : subs) {
      if (n.order() != n_order) continue;
      if (n.order() > k.order()) break;
      if (!k.contains(n) || !is_normal_in(k, n)) continue;
      const Quotient q = quotient_group(k, n);
      const Subgroup whole = Subgroup::whole(q.group);
      if (order_census(whole) != target) continue;
      if (are_isomorphic(whole, h)) return true;
    }
  }
  return false;
}

bool has_section_isomorphic(const GroupPtr& g, const GroupPtr& h) {
  return has_section_isomorphic(Subgroup::whole(g), Subgroup::whole(h));
}

}  // namespace fusion
