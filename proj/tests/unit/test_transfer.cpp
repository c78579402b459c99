#include "doctest.h"

#include "fusion/corpus.hpp"
#include "fusion/error.hpp"
#include "fusion/local_structure.hpp"
#include "fusion/numbers.hpp"
#include "fusion/saturation.hpp"
#include "fusion/transfer.hpp"
#include "helpers.hpp"

using namespace fusion;
using namespace testing_support;

namespace {

Subgroup s4_d8(const GroupPtr& s4) { return gen(s4, {{{1, 2, 3, 4}}, {{1, 3}}}); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const FusionError& e) {
    return e.kind();
  }
  FAIL("no FusionError thrown");
  return ErrorKind::InvalidInput;
}

struct Pair {
  Subgroup g;
  Subgroup p;
  std::size_t prime;
  std::string name;
};

std::vector<Pair> corpus_pairs(std::size_t max_order = 5000) {
  std::vector<Pair> out;
  for (const auto& e : load_corpus(default_corpus_path())) {
    auto g = named_group(e.group);
    if (g->order() > max_order) continue;
    auto whole_g = Subgroup::whole(g);
    out.push_back({whole_g, sylow_subgroup(whole_g, e.prime), e.prime, e.group});
  }
  return out;
}

}  // namespace

TEST_CASE("group_focal examples") {
  auto s4 = named_group("S4");
  auto g = Subgroup::whole(s4);
  auto p = s4_d8(s4);
  auto v = gen(s4, {{{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}});
  CHECK(group_focal(g, p, 2, FocalKind::focal) == v);
  CHECK(group_focal(g, p, 2, FocalKind::hyperfocal) == v);
  // Cross-checks: A4 ∩ P and O^2(S4) ∩ P.
  auto a4 = gen(s4, {{{1, 2, 3}}, {{1, 2}, {3, 4}}});
  CHECK(intersection(a4, p) == v);
  CHECK(intersection(characteristic_subgroup(g, CharacteristicKind::p_residue, 2), p) == v);

  auto d8 = whole("D8");
  CHECK(group_focal(d8, d8, 2, FocalKind::focal) == commutator_subgroup(d8, d8));
  CHECK(group_focal(d8, d8, 2, FocalKind::hyperfocal).is_trivial());

  auto c6 = whole("C6");
  CHECK(group_focal(c6, sylow_subgroup(c6, 3), 3, FocalKind::hyperfocal).is_trivial());

  CHECK(kind_of([&] { group_focal(g, v, 2, FocalKind::focal); }) == ErrorKind::NotSylow);
}

TEST_CASE("system_focal examples") {
  auto gl = named_group("GL(3,2)");
  auto p = sylow_subgroup(gl, 2);
  auto f = fusion_system_of_group(gl, p, 2);
  CHECK(system_focal(f, FocalKind::focal) == p);
  CHECK(system_focal(f, FocalKind::hyperfocal) == p);
  CHECK(kind_of([&] { system_focal(universal_fusion_system(whole("D8"), 2), FocalKind::hyperfocal); }) ==
        ErrorKind::NotSaturated);
  // The unsaturated universal system still has a focal subgroup.
  CHECK(system_focal(universal_fusion_system(whole("D8"), 2), FocalKind::focal) == whole("D8"));
}

TEST_CASE("p-nilpotency examples") {
  CHECK_FALSE(is_p_nilpotent(whole("S4"), 2).p_nilpotent);
  CHECK_FALSE(is_p_nilpotent(whole("S3"), 3).p_nilpotent);
  CHECK(is_p_nilpotent(whole("S3"), 2).p_nilpotent);
  CHECK(is_p_nilpotent(whole("C7:C3"), 2).p_nilpotent);
  CHECK(is_p_nilpotent(whole("A5"), 7).p_nilpotent);
  // D12 = S3 x C2 has the normal complement C3.
  auto r = is_p_nilpotent(whole("D12"), 2);
  CHECK(r.criteria.size() == 5);
  CHECK(r.p_nilpotent);
  CHECK(is_p_nilpotent(whole("D12"), 3).p_nilpotent == false);
  CHECK(is_p_nilpotent(whole("C3:C4"), 2).p_nilpotent);
  CHECK(is_p_nilpotent(whole("C3:C4"), 3).p_nilpotent == false);
  CHECK(is_p_nilpotent(whole("C7:C3"), 3).p_nilpotent);
}

TEST_CASE("control of fusion and transfer examples") {
  auto s4 = named_group("S4");
  auto g = Subgroup::whole(s4);
  auto p = s4_d8(s4);
  CHECK(controls_fusion(g, g, p, 2));
  CHECK_FALSE(controls_fusion(g, p, p, 2));
  CHECK(kind_of([&] { controls_fusion(p, g, p, 2); }) == ErrorKind::ContainmentViolated);
  CHECK(controls_fusion_on(g, normalizer(g, p), center(p)));

  CHECK_FALSE(controls_transfer(g, p, p, 2).controls);
  CHECK(controls_transfer(g, g, p, 2).controls);

  auto grun = grun_check(g, p, 2);
  CHECK(grun.equal);
  CHECK(grun.formula.order() == 4);
  auto d8 = whole("D8");
  CHECK(grun_check(d8, d8, 2).formula == commutator_subgroup(d8, d8));
  auto s3 = named_group("S3");
  auto c3 = gen(s3, {{{1, 2, 3}}});
  auto gs = grun_check(Subgroup::whole(s3), c3, 3);
  CHECK(gs.equal);
  CHECK(gs.formula == c3);
}

TEST_CASE("wreath quotients") {
  CHECK(has_wreath_quotient(whole("D8"), 2));
  CHECK_FALSE(has_wreath_quotient(whole("Q8"), 2));
  CHECK_FALSE(has_wreath_quotient(whole("C2^3"), 2));
  CHECK_FALSE(has_wreath_quotient(whole("C2xC4"), 2));
  // Order-16 dihedral, semidihedral and quaternion groups all have D8 as P/Z(P).
  CHECK(has_wreath_quotient(whole("D16"), 2));
  CHECK(has_wreath_quotient(whole("SD16"), 2));
  CHECK(has_wreath_quotient(whole("Q16"), 2));
  CHECK(has_wreath_quotient(whole("C3wrC3"), 3));
  CHECK_FALSE(has_wreath_quotient(whole("C9:C3"), 3));
  CHECK_FALSE(has_wreath_quotient(whole("C3^2"), 3));
}

TEST_CASE("ZJ check") {
  auto g = whole("C9:C3");
  auto r = zj_control_check(g, g, 3);
  CHECK(r.qd_free);
  CHECK(r.controls);
  CHECK(kind_of([&] { zj_control_check(whole("S4"), s4_d8(named_group("S4")), 2); }) == ErrorKind::InvalidInput);
  auto qd = whole("Qd(3)");
  auto rq = zj_control_check(qd, sylow_subgroup(qd, 3), 3);
  CHECK_FALSE(rq.qd_free);
}

TEST_CASE("property: focal and hyperfocal subgroup theorem corpus-wide") {
  for (const auto& c : corpus_pairs()) {
    CAPTURE(c.name);
    CAPTURE(c.prime);
    auto foc = group_focal(c.g, c.p, c.prime, FocalKind::focal);
    auto hyp = group_focal(c.g, c.p, c.prime, FocalKind::hyperfocal);
    CHECK(foc == intersection(characteristic_subgroup(c.g, CharacteristicKind::derived), c.p));
    auto residue = characteristic_subgroup(c.g, CharacteristicKind::p_residue, c.prime);
    CHECK(hyp == intersection(residue, c.p));
    CHECK(c.g.order() / residue.order() == c.p.order() / hyp.order());
  }
}

TEST_CASE("property: system focal subgroups agree with group ones and decompose") {
  for (const auto& c : corpus_pairs(2000)) {
    CAPTURE(c.name);
    CAPTURE(c.prime);
    auto f = fusion_system_of_group(c.g, c.p, c.prime);
    auto foc = system_focal(f, FocalKind::focal);
    auto hyp = system_focal(f, FocalKind::hyperfocal);
    CHECK(foc == group_focal(c.g, c.p, c.prime, FocalKind::focal));
    CHECK(hyp == group_focal(c.g, c.p, c.prime, FocalKind::hyperfocal));
    auto derived = commutator_subgroup(c.p, c.p);
    auto z = center(f);
    CHECK(foc == join(hyp, derived));
    CHECK(intersection(foc, z) == intersection(derived, z));
    if (is_abelian(c.p)) {
      CHECK(intersection(z, foc).is_trivial());
      CHECK(z.order() * foc.order() == c.p.order());
    }
  }
}

TEST_CASE("property: p-nilpotency criteria agree corpus-wide") {
  for (const auto& c : corpus_pairs()) {
    CAPTURE(c.name);
    CAPTURE(c.prime);
    PNilpotencyReport r;
    CHECK_NOTHROW(r = is_p_nilpotent(c.g, c.prime));
    // Every p'-group is p-nilpotent.
    if (c.p.is_trivial()) CHECK(r.p_nilpotent);
    for (std::size_t q : prime_divisors(c.g.order() * 7)) CHECK_NOTHROW(is_p_nilpotent(c.g, q));
  }
}

TEST_CASE("property: Burnside, Grün and Yoshida corpus-wide") {
  int yoshida = 0;
  for (const auto& c : corpus_pairs()) {
    CAPTURE(c.name);
    CAPTURE(c.prime);
    auto n = normalizer(c.g, c.p);
    CHECK(controls_fusion_on(c.g, n, center(c.p)));
    CHECK(grun_check(c.g, c.p, c.prime).equal);
    if (!has_wreath_quotient(c.p, c.prime)) {
      ++yoshida;
      CHECK(controls_transfer(c.g, n, c.p, c.prime).controls);
    }
  }
  CHECK(yoshida >= 20);
}

TEST_CASE("property: ZJ control and Qd-free normalizer control on odd primes") {
  for (const auto& c : corpus_pairs()) {
    if (c.prime == 2) continue;
    CAPTURE(c.name);
    CAPTURE(c.prime);
    auto r = zj_control_check(c.g, c.p, c.prime);
    if (r.qd_free) CHECK(r.controls);
    if (c.p.is_trivial()) continue;
    auto f = fusion_system_of_group(c.g, c.p, c.prime);
    auto trivial = [&](const FusionSystem& x) {
      return subsystem_equal(x, trivial_fusion_system(x.p_group(), c.prime, x.lattice_ptr()));
    };
    auto nf = local_subsystem(f, r.zj, LocalKind::normalizer);
    CHECK(trivial(f) == trivial(nf));
  }
}

TEST_CASE("property: foc(F) = foc(E) iff hyp(F) = hyp(E) on nested saturated systems") {
  int pairs = 0;
  for (const auto& c : corpus_pairs(2000)) {
    if (c.p.is_trivial()) continue;
    CAPTURE(c.name);
    CAPTURE(c.prime);
    auto f = fusion_system_of_group(c.g, c.p, c.prime);
    std::vector<FusionSystem> subs;
    subs.push_back(fusion_system_of_group(normalizer(c.g, c.p), c.p, c.prime, f.lattice_ptr()));
    subs.push_back(trivial_fusion_system(c.p, c.prime, f.lattice_ptr()));
    for (const auto& e : subs) {
      REQUIRE(subsystem_leq(e, f));
      const bool foc_eq = system_focal(e, FocalKind::focal) == system_focal(f, FocalKind::focal);
      const bool hyp_eq = system_focal(e, FocalKind::hyperfocal) == system_focal(f, FocalKind::hyperfocal);
      CHECK(foc_eq == hyp_eq);
      ++pairs;
    }
  }
  CHECK(pairs >= 40);
}
