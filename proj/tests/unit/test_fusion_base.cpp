#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "fusion/corpus.hpp"
#include "fusion/error.hpp"
#include "fusion/fusion_system.hpp"
#include "helpers.hpp"

using namespace fusion;
using namespace testing_support;

namespace {

Subgroup s4_d8(const GroupPtr& s4) { return gen(s4, {{{1, 2, 3, 4}}, {{1, 3}}}); }

// F_{D8}(GL(3,2)) carried onto the D8 inside S4.
FusionSystem gl32_on_s4_d8(const Subgroup& target) {
  auto gl = named_group("GL(3,2)");
  auto p = sylow_subgroup(gl, 2);
  auto f = fusion_system_of_group(gl, p, 2);
  auto iso = find_isomorphism(p, target);
  REQUIRE(iso.has_value());
  return transport(f, GroupMorphism(p, target, *iso));
}

}  // namespace

TEST_CASE("fusion_system_of_group examples") {
  auto d8 = whole("D8");
  auto fp = fusion_system_of_group(d8.parent(), d8, 2);
  const auto& L = fp.lattice();
  for (std::size_t i = 0; i < L.size(); ++i)
    for (std::size_t j = 0; j < L.size(); ++j) CHECK(fp.hom_set(L[i], L[j]) == hom_P(d8, L[i], L[j]));

  auto s4 = named_group("S4");
  auto p = s4_d8(s4);
  auto f = fusion_system_of_group(s4, p, 2);
  auto z = center(p);
  auto maps = f.hom_set(z, p);
  std::set<Subgroup> images;
  for (auto& m : maps) images.insert(m.image());
  CHECK(maps.size() == 3);
  CHECK(images.size() == 3);
  CHECK(f.provenance().sylow);

  auto s3 = named_group("S3");
  auto c3 = gen(s3, {{{1, 2, 3}}});
  auto f3 = fusion_system_of_group(s3, c3, 3);
  CHECK(f3.aut_order(f3.lattice().index_of(c3)) == 2);

  CHECK_THROWS_AS(fusion_system_of_group(s4, p, 3), FusionError);
  CHECK_THROWS_AS(fusion_system_of_group(s4, Subgroup::whole(s4), 2), FusionError);
  CHECK_THROWS_AS(fusion_system_of_group(s4, gen(s4, {{{1, 2, 3}}}), 2), FusionError);
  auto small = fusion_system_of_group(s4, gen(s4, {{{1, 2}}}), 2);
  CHECK_FALSE(small.provenance().sylow);
}

TEST_CASE("universal_fusion_system") {
  auto c2 = whole("C2");
  CHECK(subsystem_equal(universal_fusion_system(c2, 2), trivial_fusion_system(c2, 2)));
  auto v = whole("C2^2");
  auto uv = universal_fusion_system(v, 2);
  CHECK(uv.aut_order(uv.lattice().top_index()) == 6);
  auto d8 = whole("D8");
  auto ud = universal_fusion_system(d8, 2);
  CHECK(ud.aut_order(ud.lattice().top_index()) == 8);
  CHECK(audit_axioms(ud).ok);
  ScopedCaps sc([] { auto c = caps(); c.map_domain = 4; return c; }());
  CHECK_THROWS_AS(universal_fusion_system(d8, 2), FusionError);
}

TEST_CASE("generated_fusion_system") {
  auto s4 = named_group("S4");
  auto p = s4_d8(s4);
  CHECK(subsystem_equal(generated_fusion_system(p, 2, {}), fusion_system_of_group(p, p, 2)));

  // x = (1234), y = (12)(34) inverts x, so <x^2, y> is the normal V4 of S4.
  auto v = gen(s4, {{{1, 3}, {2, 4}}, {{1, 2}, {3, 4}}});
  std::vector<Elem> img;
  const Elem a = el(s4, {{1, 3}, {2, 4}}), b = el(s4, {{1, 2}, {3, 4}}), c = el(s4, {{1, 4}, {2, 3}});
  // a -> b -> c -> a has order 3.
  for (Elem e : v.members()) img.push_back(e == a ? b : e == b ? c : e == c ? a : e);
  GroupMorphism order3(v, v, img);
  auto gen_f = generated_fusion_system(p, 2, {order3});
  auto grp_f = fusion_system_of_group(s4, p, 2);
  CHECK(subsystem_equal(gen_f, grp_f));

  // Idempotence: seeding with every morphism of F gives F back.
  std::vector<GroupMorphism> all;
  for (std::size_t i = 0; i < grp_f.lattice().size(); ++i)
    for (std::size_t k = 0; k < grp_f.maps_from(i).size(); ++k) all.push_back(grp_f.morphism(i, k));
  CHECK(subsystem_equal(generated_fusion_system(p, 2, all), grp_f));
}

TEST_CASE("hom_set") {
  auto s4 = named_group("S4");
  auto p = s4_d8(s4);
  auto f = fusion_system_of_group(s4, p, 2);
  const auto& L = f.lattice();
  for (std::size_t i = 0; i < L.size(); ++i) {
    auto auts = f.hom_set(L[i], L[i]);
    CHECK(std::find(auts.begin(), auts.end(), GroupMorphism::identity(L[i])) != auts.end());
  }
  CHECK_FALSE(f.hom_set(gen(s4, {{{1, 3}, {2, 4}}}), gen(s4, {{{1, 2}, {3, 4}}})).empty());
  CHECK_THROWS_AS(f.hom_set(gen(s4, {{{1, 2, 3}}}), p), FusionError);
}

TEST_CASE("f_conjugacy") {
  auto ab = whole("C2xC4");
  auto part = f_conjugacy(trivial_fusion_system(ab, 2));
  CHECK(part.element_classes.size() == 8);

  auto s4 = named_group("S4");
  auto p = s4_d8(s4);
  auto gl = gl32_on_s4_d8(p);
  auto pg = f_conjugacy(gl);
  std::set<std::size_t> inv_classes;
  for (std::size_t a = 0; a < p.order(); ++a)
    if (s4->element_order(p.members()[a]) == 2) inv_classes.insert(pg.element_class_of[a]);
  CHECK(inv_classes.size() == 1);

  auto f = fusion_system_of_group(s4, p, 2);
  auto ps = f_conjugacy(f);
  auto cls = [&](Elem e) { return ps.element_class_of[*p.position(e)]; };
  CHECK(cls(el(s4, {{1, 3}, {2, 4}})) == cls(el(s4, {{1, 2}, {3, 4}})));
  CHECK(cls(el(s4, {{1, 2, 3, 4}})) == cls(el(s4, {{1, 4, 3, 2}})));
  CHECK(cls(el(s4, {{1, 3}})) != cls(el(s4, {{1, 2}, {3, 4}})));
  // Representatives maximize |N_P(S)|.
  const auto& L = f.lattice();
  for (std::size_t c = 0; c < ps.subgroup_classes.size(); ++c)
    for (std::size_t i : ps.subgroup_classes[c])
      CHECK(L[L.normalizer(ps.representatives[c])].order() >= L[L.normalizer(i)].order());
}

TEST_CASE("subsystem comparisons") {
  auto s4 = named_group("S4");
  auto p = s4_d8(s4);
  auto f = fusion_system_of_group(s4, p, 2);
  auto u = universal_fusion_system(p, 2);
  auto t = trivial_fusion_system(p, 2);
  auto gl = gl32_on_s4_d8(p);
  CHECK(subsystem_leq(f, u));
  CHECK(subsystem_leq(gl, u));
  CHECK(subsystem_leq(t, f));
  CHECK(subsystem_leq(f, gl));
  CHECK_FALSE(subsystem_equal(f, gl));
  CHECK_FALSE(subsystem_leq(u, f));
  CHECK_THROWS_AS(subsystem_equal(f, trivial_fusion_system(whole("D8"), 2)), FusionError);
}

TEST_CASE("property: corpus systems pass the axiom audit and match are_fused") {
  for (const auto& entry : load_corpus(default_corpus_path())) {
    auto g = named_group(entry.group);
    if (g->order() > 400) continue;
    CAPTURE(entry.group);
    CAPTURE(entry.prime);
    auto p = sylow_subgroup(g, entry.prime);
    auto f = fusion_system_of_group(g, p, entry.prime);
    auto audit = audit_axioms(f);
    CHECK_MESSAGE(audit.ok, audit.failure);
    auto part = f_conjugacy(f);
    auto pc = f_conjugacy(trivial_fusion_system(p, entry.prime, f.lattice_ptr()));
    const auto whole_g = Subgroup::whole(g);
    for (std::size_t a = 0; a < p.order(); ++a)
      for (std::size_t b = 0; b < p.order(); ++b) {
        const bool same = part.element_class_of[a] == part.element_class_of[b];
        const auto verdict = are_fused(p, whole_g, p.members()[a], p.members()[b]);
        CHECK(same == (verdict != FusionVerdict::not_conjugate));
        // P-conjugate elements are F-conjugate.
        if (pc.element_class_of[a] == pc.element_class_of[b]) CHECK(same);
      }
  }
}

TEST_CASE("property: generation is monotone and idempotent on random seeds") {
  std::mt19937 rng(5);
  for (auto name : {"D8", "Q8", "C2^3", "D16"}) {
    auto p = whole(name);
    auto u = universal_fusion_system(p, 2);
    std::vector<GroupMorphism> pool;
    for (std::size_t i = 0; i < u.lattice().size(); ++i)
      for (std::size_t k = 0; k < u.maps_from(i).size(); ++k) pool.push_back(u.morphism(i, k));
    for (int t = 0; t < 6; ++t) {
      std::vector<GroupMorphism> small{pool[rng() % pool.size()]};
      auto big = small;
      big.push_back(pool[rng() % pool.size()]);
      auto fs = generated_fusion_system(p, 2, small, u.lattice_ptr());
      auto fb = generated_fusion_system(p, 2, big, u.lattice_ptr());
      CHECK(subsystem_leq(fs, fb));
      CHECK(audit_axioms(fb).ok);
      std::vector<GroupMorphism> all;
      for (std::size_t i = 0; i < fs.lattice().size(); ++i)
        for (std::size_t k = 0; k < fs.maps_from(i).size(); ++k) all.push_back(fs.morphism(i, k));
      CHECK(subsystem_equal(generated_fusion_system(p, 2, all, u.lattice_ptr()), fs));
    }
  }
}

TEST_CASE("transport round trip") {
  auto d8 = whole("D8");
  auto f = fusion_system_of_group(named_group("S4"), sylow_subgroup(named_group("S4"), 2), 2);
  auto iso = find_isomorphism(f.p_group(), d8);
  REQUIRE(iso);
  GroupMorphism alpha(f.p_group(), d8, *iso);
  auto moved = transport(f, alpha);
  CHECK(audit_axioms(moved).ok);
  CHECK(moved.morphism_count() == f.morphism_count());
  auto back = transport(moved, alpha.inverse(), f.lattice_ptr());
  CHECK(subsystem_equal(back, f));
}
