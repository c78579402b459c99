#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "fusion/error.hpp"
#include "fusion/numbers.hpp"
#include "fusion/registry.hpp"
#include "fusion/subgroups.hpp"
#include "helpers.hpp"

using namespace fusion;

using namespace testing_support;

namespace {

// Brute-force closure test: every product and inverse stays in the set.
bool closed(const FiniteGroup& g) {
  std::set<Permutation> all(g.elements().begin(), g.elements().end());
  for (auto& a : g.elements()) {
    if (!all.count(a.inverse())) return false;
    for (auto& b : g.elements())
      if (!all.count(a * b)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("permutations") {
  auto c = Permutation::from_cycles(4, {{1, 2, 3, 4}}, true);
  CHECK(std::vector<Point>(c.images().begin(), c.images().end()) == std::vector<Point>{1, 2, 3, 0});
  CHECK((c * c.inverse()).is_identity());
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), FusionError);
  // (a*b)(i) = a(b(i))
  auto t = Permutation::from_cycles(4, {{1, 2}}, true);
  CHECK((c * t)[0] == c[t[0]]);
}

TEST_CASE("group_from_generators examples") {
  auto d8 = FiniteGroup::generate(4, {Permutation::from_cycles(4, {{1, 2, 3, 4}}, true),
                                      Permutation::from_cycles(4, {{1, 3}}, true)});
  CHECK(d8->order() == 8);
  auto c3 = FiniteGroup::generate(3, {Permutation::from_cycles(3, {{1, 2, 3}}, true)});
  CHECK(c3->order() == 3);
  auto gl = named_group("GL(3,2)");
  CHECK(gl->order() == (8 - 1) * (8 - 2) * (8 - 4));
  CHECK(gl->degree() == 7);
  CHECK(closed(*d8));
  CHECK(closed(*named_group("S4")));
  CHECK(d8->element(FiniteGroup::identity()).is_identity());
}

TEST_CASE("order cap") {
  ScopedCaps sc([] { auto c = caps(); c.group_order = 100; return c; }());
  CHECK_THROWS_AS(named_group("S5"), FusionError);
  try {
    named_group("S5");
  } catch (const FusionError& e) {
    CHECK(e.kind() == ErrorKind::OrderCapExceeded);
  }
}

TEST_CASE("registry orders") {
  struct Row { const char* name; std::size_t order; };
  for (auto [name, order] : std::vector<Row>{
           {"S3", 6}, {"S4", 24}, {"S5", 120}, {"A4", 12}, {"A5", 60}, {"D8", 8},
           {"D12", 12}, {"D16", 16}, {"Q8", 8}, {"Q16", 16}, {"SD16", 16}, {"C2^2", 4},
           {"V4", 4}, {"C2xC4", 8}, {"C2^3", 8}, {"C3:C4", 12}, {"C7:C3", 21}, {"C5:C4", 20},
           {"C9:C3", 27}, {"S3xS3", 36}, {"C3^2:C4", 36}, {"C3^2:Q8", 72}, {"C2^3:C7", 56},
           {"SL(2,3)", 24}, {"GL(2,3)", 48}, {"GL(3,2)", 168}, {"PSL(2,7)", 168},
           {"PGL(2,7)", 336}, {"PSL(2,17)", 2448}, {"Qd(3)", 216}, {"C2wrC2", 8},
           {"C3wrC3", 81}, {"C6", 6}}) {
    CAPTURE(name);
    CHECK(named_group(name)->order() == order);
  }
  CHECK_THROWS_AS(named_group("Foo"), FusionError);
  for (auto& n : registry_names()) CHECK_NOTHROW(named_group(n));
}

TEST_CASE("Q8 elements") {
  auto q = named_group("Q8");
  int inv = 0, four = 0;
  for (Elem e = 1; e < q->order(); ++e) {
    if (q->element_order(e) == 2) ++inv;
    if (q->element_order(e) == 4) ++four;
  }
  CHECK(inv == 1);
  CHECK(four == 6);
}

TEST_CASE("centralizer and normalizer") {
  auto s4 = named_group("S4");
  auto z = gen(s4, {{{1, 3}, {2, 4}}});
  auto c = centralizer(s4, z);
  CHECK(c.order() == 8);
  CHECK(c == gen(s4, {{{1, 2, 3, 4}}, {{1, 3}}}));
  auto whole = Subgroup::whole(s4);
  CHECK(normalizer(whole, whole) == whole);
  auto c2x4 = named_group("C2xC4");
  auto any = generate_subgroup(c2x4, std::vector<Elem>{3});
  CHECK(centralizer(c2x4, any) == Subgroup::whole(c2x4));
}

TEST_CASE("sylow") {
  auto s4 = named_group("S4");
  CHECK(sylow_subgroup(s4, 2).order() == 8);
  auto s3 = named_group("S3");
  CHECK(sylow_subgroup(s3, 3) == gen(s3, {{{1, 2, 3}}}));
  auto gl = named_group("GL(3,2)");
  auto p = sylow_subgroup(gl, 2);
  // 168 = 8 * 21, so the Sylow 2-subgroup is dihedral of order 8.
  CHECK(p.order() == 8);
  CHECK(are_isomorphic(p, Subgroup::whole(named_group("D8"))));
  CHECK(sylow_subgroup(s3, 5).is_trivial());
  for (auto name : {"S4", "A5", "S5", "GL(3,2)", "PGL(2,7)", "C3^2:Q8", "SL(2,3)"}) {
    auto g = named_group(name);
    for (std::size_t q : {2, 3, 5, 7}) {
      auto s = sylow_subgroup(g, q);
      CHECK(s.order() == p_part(g->order(), q));
      CHECK(is_sylow(Subgroup::whole(g), s, q));
    }
  }
  // Sylow count is 1 mod p and divides the index.
  auto syl = all_sylow_subgroups(Subgroup::whole(named_group("A5")), 2);
  CHECK(syl.size() == 5);
}

TEST_CASE("all_subgroups") {
  CHECK(all_subgroups(Subgroup::whole(named_group("D8"))).size() == 10);
  CHECK(all_subgroups(Subgroup::whole(named_group("C2"))).size() == 2);
  CHECK(all_subgroups(Subgroup::whole(named_group("C2^2"))).size() == 5);
  CHECK(all_subgroups(Subgroup::whole(named_group("Q8"))).size() == 6);
  CHECK(all_subgroups(Subgroup::whole(named_group("S4"))).size() == 30);
  CHECK(all_subgroups(Subgroup::whole(named_group("A5"))).size() == 59);
  auto subs = all_subgroups(Subgroup::whole(named_group("D16")));
  CHECK(std::is_sorted(subs.begin(), subs.end()));
  for (auto& s : subs) CHECK(16 % s.order() == 0);
  CHECK_THROWS_AS(all_subgroups(Subgroup::whole(named_group("S4")), 10), FusionError);
}

TEST_CASE("characteristic subgroups") {
  auto s4 = named_group("S4");
  auto a4 = characteristic_subgroup(s4, CharacteristicKind::derived);
  CHECK(a4.order() == 12);
  CHECK(are_isomorphic(a4, Subgroup::whole(named_group("A4"))));
  auto d8 = named_group("D8");
  CHECK(characteristic_subgroup(d8, CharacteristicKind::thompson_j).order() == 8);
  CHECK(characteristic_subgroup(s4, CharacteristicKind::o_p_prime, 2).is_trivial());
  CHECK(characteristic_subgroup(s4, CharacteristicKind::o_p, 2).order() == 4);
  CHECK(characteristic_subgroup(d8, CharacteristicKind::frattini).order() == 2);
  CHECK(characteristic_subgroup(d8, CharacteristicKind::center).order() == 2);
  CHECK(characteristic_subgroup(d8, CharacteristicKind::omega_1, 2).order() == 8);
  CHECK(characteristic_subgroup(named_group("Q8"), CharacteristicKind::omega_1, 2).order() == 2);
  CHECK(characteristic_subgroup(s4, CharacteristicKind::p_residue, 2).order() == 12);
  CHECK(characteristic_subgroup(s4, CharacteristicKind::p_residue, 3).order() == 24);
  CHECK_THROWS_AS(characteristic_subgroup(s4, CharacteristicKind::o_p), FusionError);
  CHECK(characteristic_kind_from_string("thompson_j") == CharacteristicKind::thompson_j);
}

TEST_CASE("quotients") {
  auto s4 = named_group("S4");
  auto v4 = characteristic_subgroup(s4, CharacteristicKind::o_p, 2);
  auto q = quotient_group(Subgroup::whole(s4), v4);
  CHECK(q.group->order() == 6);
  CHECK_FALSE(is_abelian(Subgroup::whole(q.group)));
  auto triv = quotient_group(Subgroup::whole(s4), Subgroup::trivial(s4));
  CHECK(are_isomorphic(Subgroup::whole(triv.group), Subgroup::whole(s4)));
  auto d8 = named_group("D8");
  auto z = characteristic_subgroup(d8, CharacteristicKind::center);
  auto dq = quotient_group(Subgroup::whole(d8), z);
  CHECK(are_isomorphic(Subgroup::whole(dq.group), Subgroup::whole(named_group("C2^2"))));
  auto s3 = gen(s4, {{{1, 2}}, {{1, 2, 3}}});
  CHECK_THROWS_AS(quotient_group(Subgroup::whole(s4), s3), FusionError);
  // projection is a homomorphism with kernel N
  for (Elem a = 0; a < s4->order(); ++a)
    for (Elem b = 0; b < s4->order(); ++b)
      CHECK(q.project(s4->mul(a, b)) == q.group->mul(q.project(a), q.project(b)));
  for (Elem a = 0; a < s4->order(); ++a) CHECK((q.project(a) == 0) == v4.contains(a));
}

TEST_CASE("are_fused") {
  auto s3 = named_group("S3");
  auto a3 = gen(s3, {{{1, 2, 3}}});
  auto x = el(s3, {{1, 2, 3}}), y = el(s3, {{1, 3, 2}});
  CHECK(are_fused(a3, Subgroup::whole(s3), x, y) == FusionVerdict::fused);
  CHECK(are_fused(a3, Subgroup::whole(s3), x, x) == FusionVerdict::conjugate_in_H);
  auto s4 = named_group("S4");
  auto d8 = gen(s4, {{{1, 2, 3, 4}}, {{1, 3}}});
  CHECK(are_fused(d8, Subgroup::whole(s4), el(s4, {{1, 3}, {2, 4}}), el(s4, {{1, 2}, {3, 4}})) ==
        FusionVerdict::fused);
  CHECK(are_fused(d8, Subgroup::whole(s4), el(s4, {{1, 3}}), el(s4, {{1, 2, 3, 4}})) ==
        FusionVerdict::not_conjugate);
  CHECK_THROWS_AS(are_fused(a3, Subgroup::whole(s3), el(s3, {{1, 2}}), x), FusionError);
}

TEST_CASE("sections") {
  CHECK(has_section_isomorphic(named_group("S4"), named_group("S4")));
  CHECK_FALSE(has_section_isomorphic(named_group("A4"), named_group("C6")));
  CHECK(has_section_isomorphic(named_group("S4"), named_group("S3")));
  CHECK(has_section_isomorphic(named_group("S4"), named_group("C2^2")));
  CHECK_FALSE(has_section_isomorphic(named_group("S4"), named_group("Q8")));
  CHECK(has_section_isomorphic(named_group("SL(2,3)"), named_group("A4")));
}

TEST_CASE("isomorphism") {
  CHECK(are_isomorphic(Subgroup::whole(named_group("D8")), Subgroup::whole(named_group("C2wrC2"))));
  CHECK_FALSE(are_isomorphic(Subgroup::whole(named_group("D8")), Subgroup::whole(named_group("Q8"))));
  CHECK(are_isomorphic(Subgroup::whole(named_group("PSL(2,7)")),
                       Subgroup::whole(named_group("GL(3,2)"))));
  CHECK_FALSE(are_isomorphic(Subgroup::whole(named_group("C3wrC3")),
                             Subgroup::whole(named_group("C9:C3"))));
}

TEST_CASE("property: random subgroups satisfy Lagrange and closure") {
  std::mt19937 rng(7);
  for (auto name : {"S4", "S5", "GL(3,2)", "C3^2:Q8"}) {
    auto g = named_group(name);
    for (int t = 0; t < 20; ++t) {
      std::vector<Elem> gs;
      for (int k = 0; k < 2; ++k) gs.push_back(rng() % g->order());
      auto h = generate_subgroup(g, gs);
      CHECK(g->order() % h.order() == 0);
      for (auto a : h.members())
        for (auto b : h.members()) CHECK(h.contains(g->mul(a, b)));
      auto n = normalizer(Subgroup::whole(g), h);
      CHECK(n.contains(h));
      CHECK(is_normal_in(n, h));
      auto c = centralizer(Subgroup::whole(g), h);
      CHECK(n.contains(c));
    }
  }
}
