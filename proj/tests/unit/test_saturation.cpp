#include "doctest.h"

#include <random>

#include "fusion/corpus.hpp"
#include "fusion/error.hpp"
#include "fusion/saturation.hpp"
#include "helpers.hpp"

using namespace fusion;
using namespace testing_support;

namespace {

Subgroup s4_d8(const GroupPtr& s4) { return gen(s4, {{{1, 2, 3, 4}}, {{1, 3}}}); }

void check_status_laws(const FusionSystem& f) {
  SaturationAnalysis a(f);
  const auto& L = f.lattice();
  for (std::size_t i = 0; i < L.size(); ++i) {
    auto st = a.status(i);
    CHECK(L[L.normalizer(i)].order() == a.aut_p_order(i) * L[L.centralizer(i)].order());
    if (st.receptive) CHECK(st.centralized);
    if (st.centralized && st.automized) CHECK(st.normalized);
    CHECK(st.centralized == st.receptive);
    CHECK(st.normalized == (st.centralized && st.automized));
  }
  // Every class has a normalized member.
  for (auto& cls : a.conjugacy().subgroup_classes) {
    bool any = false;
    for (std::size_t i : cls) any = any || a.normalized(i);
    CHECK(any);
  }
}

}  // namespace

TEST_CASE("status examples") {
  auto s4 = named_group("S4");
  auto p = s4_d8(s4);
  auto f = fusion_system_of_group(s4, p, 2);
  auto st = status(f, gen(s4, {{{1, 2}, {3, 4}}}));
  CHECK_FALSE(st.centralized);
  CHECK_FALSE(st.normalized);
  CHECK(status(f, p).automized);
  CHECK(status(f, center(p)).centralized);
  CHECK(status(f, center(p)).receptive);
}

TEST_CASE("n_phi") {
  auto s4 = named_group("S4");
  auto p = s4_d8(s4);
  auto f = fusion_system_of_group(s4, p, 2);
  const auto& L = f.lattice();
  for (std::size_t i = 0; i < L.size(); ++i)
    CHECK(n_phi(f, GroupMorphism::identity(L[i])) == normalizer(p, L[i]));

  auto s = gen(s4, {{{1, 2}, {3, 4}}});
  auto z = center(p);
  auto isos = f.hom_set(s, z);
  REQUIRE(isos.size() == 1);
  auto n = n_phi(f, isos[0]);
  // Aut_P(Z(P)) is trivial, so N_phi is C_P(S): the normal V4 of S4.
  CHECK(n.order() == 4);
  CHECK(n == gen(s4, {{{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}}));
  for (std::size_t i = 0; i < L.size(); ++i)
    for (std::size_t k = 0; k < f.maps_from(i).size(); ++k) {
      auto phi = f.morphism(i, k);
      auto nphi = n_phi(f, phi);
      CHECK(nphi.contains(join(L[i], centralizer(p, L[i]))));
      CHECK(normalizer(p, L[i]).contains(nphi));
    }
  // Central S, central T: N_phi is all of P.
  CHECK(n_phi(f, GroupMorphism::identity(z)) == p);

  auto u = universal_fusion_system(p, 2);
  auto foreign = u.hom_set(s, gen(s4, {{{1, 3}}}));
  REQUIRE_FALSE(foreign.empty());
  CHECK_THROWS_AS(n_phi(f, foreign[0]), FusionError);
}

TEST_CASE("is_saturated examples") {
  auto s4 = named_group("S4");
  auto p = s4_d8(s4);
  auto f = fusion_system_of_group(s4, p, 2);
  auto r = is_saturated(f);
  CHECK(r.saturated);
  for (auto& v : r.verdicts) CHECK(v == true);

  auto u = is_saturated(universal_fusion_system(whole("D8"), 2));
  CHECK_FALSE(u.saturated);
  REQUIRE(u.witness.has_value());
  CHECK(u.witness->reason == "P not automized");
  for (auto& w : u.witnesses) {
    REQUIRE(w.has_value());
    CHECK(w->reason == "P not automized");
  }

  CHECK(is_saturated(trivial_fusion_system(whole("D8"), 2)).saturated);
  CHECK(is_saturated(trivial_fusion_system(whole("C9:C3"), 3)).saturated);

  using D = SaturationDefinition;
  for (auto d : {D::conjugate_automized_receptive, D::conjugate_normalized_receptive, D::normalized_receptive,
                 D::centralized_receptive}) {
    auto single = is_saturated(f, d);
    CHECK(single.saturated);
    int evaluated = 0;
    for (auto& v : single.verdicts) evaluated += v.has_value();
    CHECK(evaluated == 1);
  }
}

TEST_CASE("property: F_P(G) saturated corpus-wide, status laws hold") {
  for (const auto& entry : load_corpus(default_corpus_path())) {
    CAPTURE(entry.group);
    CAPTURE(entry.prime);
    auto g = named_group(entry.group);
    auto p = sylow_subgroup(g, entry.prime);
    auto f = fusion_system_of_group(g, p, entry.prime);
    CHECK(is_saturated(f).saturated);
    if (g->order() <= 400) check_status_laws(f);
  }
}

TEST_CASE("property: clauses agree on random generated systems") {
  // Saturated or not, the four definitions must agree; `all` throws otherwise.
  std::mt19937 rng(3);
  int saturated = 0, unsaturated = 0;
  for (auto name : {"D8", "Q8", "C2^2", "C2^3", "D16", "C2xC4", "SD16"}) {
    auto p = whole(name);
    auto u = universal_fusion_system(p, 2);
    std::vector<GroupMorphism> pool;
    for (std::size_t i = 0; i < u.lattice().size(); ++i)
      for (std::size_t k = 0; k < u.maps_from(i).size(); ++k) pool.push_back(u.morphism(i, k));
    for (int t = 0; t < 12; ++t) {
      std::vector<GroupMorphism> seed;
      const int n = 1 + static_cast<int>(rng() % 2);
      for (int k = 0; k < n; ++k) seed.push_back(pool[rng() % pool.size()]);
      auto f = generated_fusion_system(p, 2, seed, u.lattice_ptr());
      SaturationReport r;
      CHECK_NOTHROW(r = is_saturated(f));
      (r.saturated ? saturated : unsaturated)++;
      if (r.saturated) check_status_laws(f);
    }
    CHECK_NOTHROW(is_saturated(u));
  }
  CHECK(saturated > 0);
  CHECK(unsaturated > 0);
}
