#include "fusion/audit.hpp"

#include <functional>
#include <map>

#include "fusion/error.hpp"
#include "fusion/essential.hpp"
#include "fusion/local_structure.hpp"
#include "fusion/registry.hpp"
#include "fusion/saturation.hpp"
#include "fusion/subgroups.hpp"
#include "fusion/transfer.hpp"
#include "parallel.hpp"

namespace fusion {

namespace {

struct Context {
  Subgroup g;
  Subgroup p;
  std::size_t prime;
};

using Outcome = std::pair<bool, std::string>;
using SuiteFn = std::function<Outcome(const Context&)>;

Outcome focal(const Context& c) {
  const auto foc = group_focal(c.g, c.p, c.prime, FocalKind::focal);
  const auto hyp = group_focal(c.g, c.p, c.prime, FocalKind::hyperfocal);
  const auto residue = characteristic_subgroup(c.g, CharacteristicKind::p_residue, c.prime);
  const bool a = foc == intersection(characteristic_subgroup(c.g, CharacteristicKind::derived), c.p);
  const bool b = hyp == intersection(residue, c.p);
  const bool d = c.g.order() / residue.order() == c.p.order() / hyp.order();
  return {a && b && d, "|foc|=" + std::to_string(foc.order()) + " |hyp|=" + std::to_string(hyp.order())};
}

Outcome nilpotency(const Context& c) {
  const auto r = is_p_nilpotent(c.g, c.prime);
  return {true, r.p_nilpotent ? "p-nilpotent" : "not p-nilpotent"};
}

Outcome saturation(const Context& c) {
  const auto r = is_saturated(fusion_system_of_group(c.g, c.p, c.prime));
  return {r.saturated, r.saturated ? "all four definitions hold" : r.witness->reason};
}

Outcome burnside(const Context& c) {
  return {controls_fusion_on(c.g, normalizer(c.g, c.p), center(c.p)), "N_G(P) on Z(P)"};
}

Outcome grun(const Context& c) {
  const auto r = grun_check(c.g, c.p, c.prime);
  return {r.equal, "|foc|=" + std::to_string(r.focal.order()) + " |formula|=" + std::to_string(r.formula.order())};
}

Outcome yoshida(const Context& c) {
  if (has_wreath_quotient(c.p, c.prime)) return {true, "skipped: P has a C_p wr C_p quotient"};
  return {controls_transfer(c.g, normalizer(c.g, c.p), c.p, c.prime).controls, "N_G(P) controls transfer"};
}

Outcome zstar(const Context& c) {
  const auto f = fusion_system_of_group(c.g, c.p, c.prime);
  const auto k = characteristic_subgroup(c.g, CharacteristicKind::o_p_prime, c.prime);
  const auto quo = quotient_group(c.g, k);
  const auto zbar = center(Subgroup::whole(quo.group));
  const auto z = center(f);
  return {z == intersection(c.p, quo.preimage(zbar, c.g)), "|Z(F)|=" + std::to_string(z.order())};
}

Outcome fitting(const Context& c) {
  const auto f = fusion_system_of_group(c.g, c.p, c.prime);
  const auto foc = system_focal(f, FocalKind::focal);
  const auto hyp = system_focal(f, FocalKind::hyperfocal);
  const auto z = center(f);
  const auto derived = commutator_subgroup(c.p, c.p);
  bool ok = foc == join(hyp, derived) && intersection(foc, z) == intersection(derived, z);
  if (is_abelian(c.p)) ok = ok && intersection(z, foc).is_trivial() && z.order() * foc.order() == c.p.order();
  return {ok, is_abelian(c.p) ? "abelian: P = Z(F) x foc(F) checked" : "foc(F) = hyp(F)P' checked"};
}

Outcome local(const Context& c) {
  if (c.g.order() > 400) return {true, "skipped: |G| > 400"};
  const auto f = fusion_system_of_group(c.g, c.p, c.prime);
  SaturationAnalysis a(f);
  const auto& L = f.lattice();
  std::size_t checked = 0;
  for (std::size_t i = 0; i < L.size(); ++i) {
    if (!a.normalized(i)) continue;
    const auto nf = local_subsystem(f, L[i], LocalKind::normalizer, false);
    const auto cf = local_subsystem(f, L[i], LocalKind::centralizer, false);
    if (!subsystem_equal(nf, fusion_system_of_group(normalizer(c.g, L[i]), nf.p_group(), c.prime, nf.lattice_ptr())) ||
        !subsystem_equal(cf, fusion_system_of_group(centralizer(c.g, L[i]), cf.p_group(), c.prime, cf.lattice_ptr())))
      return {false, "mismatch at subgroup #" + std::to_string(i)};
    ++checked;
  }
  return {true, std::to_string(checked) + " normalized subgroups"};
}

Outcome aft(const Context& c) {
  const auto f = fusion_system_of_group(c.g, c.p, c.prime);
  AlperinFactorizer fac(f);
  const auto& L = f.lattice();
  // Exhaustive for |P| <= 16, every 7th map otherwise.
  const std::size_t stride = c.p.order() <= 16 ? 1 : 7;
  std::size_t n = 0, tried = 0;
  for (std::size_t i = 0; i < L.size(); ++i)
    for (std::size_t k = 0; k < f.maps_from(i).size(); ++k, ++n) {
      if (n % stride != 0) continue;
      const auto phi = f.morphism(i, k);
      if (recompose(fac.factorize(phi)) != phi) return {false, "recomposition mismatch"};
      ++tried;
    }
  return {true, std::to_string(tried) + " isomorphisms factorized"};
}

Outcome essentials(const Context& c) {
  const auto f = fusion_system_of_group(c.g, c.p, c.prime);
  const auto rep = essential_subgroups(f);
  for (const auto& cls : rep.classes)
    if (!is_radical(f, cls.subgroup)) return {false, "essential subgroup not radical"};
  const std::size_t out_p = f.aut_order(f.lattice().top_index()) / (c.p.order() / center(c.p).order());
  if (out_p % c.prime == 0) return {false, "Out_F(P) is not a p'-group"};
  return {true, "rank " + std::to_string(rep.rank)};
}

const std::map<std::string, SuiteFn, std::less<>>& suites() {
  static const std::map<std::string, SuiteFn, std::less<>> m{
      {"focal", focal},   {"nilpotency", nilpotency}, {"saturation", saturation}, {"burnside", burnside},
      {"grun", grun},     {"yoshida", yoshida},       {"zstar", zstar},           {"fitting", fitting},
      {"local", local},   {"aft", aft},               {"essentials", essentials}};
  return m;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"focal", "nilpotency", "saturation", "burnside", "grun", "yoshida",
                                              "zstar", "fitting",    "local",      "aft",      "essentials"};
  return names;
}

std::vector<CheckRecord> run_suite(std::string_view suite, const std::vector<CorpusEntry>& corpus) {
  auto it = suites().find(suite);
  if (it == suites().end()) throw FusionError(ErrorKind::InvalidInput, "unknown suite '" + std::string(suite) + "'");
  std::vector<CheckRecord> out(corpus.size());
  detail::parallel_for(corpus.size(), [&](std::size_t i) {
    const auto& e = corpus[i];
    const auto g = Subgroup::whole(named_group(e.group));
    const Context c{g, sylow_subgroup(g, e.prime), e.prime};
    auto [pass, detail] = it->second(c);
    out[i] = {std::string(suite), e.group, e.prime, pass, std::move(detail)};
  });
  return out;
}

}  // namespace fusion
