#include "fusion/classifier.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "fusion/config.hpp"
#include "fusion/error.hpp"
#include "fusion/numbers.hpp"
#include "fusion/registry.hpp"
#include "fusion/saturation.hpp"
#include "fusion/subgroups.hpp"
#include "parallel.hpp"

namespace fusion {

namespace {

struct EssentialCandidate {
  std::size_t q;
  /// Generators of each admissible automizer.
  std::vector<std::vector<GroupMorphism>> automizers;
};

std::vector<GroupMorphism> tags_of_generators(const RealizedAutGroup& r, const Subgroup& a) {
  std::vector<GroupMorphism> out;
  for (Elem e : generating_set(a)) out.push_back(r.tagging[e]);
  return out;
}

// Preimages in Aut(P) of the p'-subgroups of Out(P), one per conjugacy class.
std::vector<std::vector<GroupMorphism>> top_automizers(const RealizedAutGroup& ap, std::size_t prime) {
  const Quotient out = ap.out();
  const Subgroup whole_out = Subgroup::whole(out.group);
  const Subgroup whole_aut = Subgroup::whole(ap.carrier);
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<std::vector<GroupMorphism>> result;
  for (const auto& y : all_subgroups(whole_out)) {
    if (y.order() % prime == 0 || seen.count(y.mask())) continue;
    for (Elem x : whole_out.members()) seen.insert(conjugate(x, y).mask());
    result.push_back(tags_of_generators(ap, out.preimage(y, whole_aut)));
  }
  return result;
}

std::vector<EssentialCandidate> essential_candidates(const Subgroup& p, std::size_t prime,
                                                     const LatticePtr& lattice) {
  const SubgroupLattice& L = *lattice;
  const auto classes = f_conjugacy(trivial_fusion_system(p, prime, lattice));
  std::vector<EssentialCandidate> out;
  for (std::size_t c = 0; c < classes.subgroup_classes.size(); ++c) {
    const std::size_t i = classes.representatives[c];
    if (i == L.top_index()) continue;
    const Subgroup& q = L[i];
    if (!q.contains(L[L.centralizer(i)])) continue;
    const RealizedAutGroup aq = realize_aut_group(q, automorphisms(q));
    const Subgroup aut_p = generate_subgroup(aq.carrier, aq.elements_of(hom_P(p, q, q)));
    EssentialCandidate cand{i, {}};
    for (const auto& a : all_subgroups(Subgroup::whole(aq.carrier))) {
      if (!a.contains(aut_p) || p_part(a.order(), prime) != aut_p.order()) continue;
      const Quotient outa = quotient_group(a, aq.inner);
      if (!has_strongly_p_embedded(Subgroup::whole(outa.group), prime).found) continue;
      cand.automizers.push_back(tags_of_generators(aq, a));
    }
    if (!cand.automizers.empty()) out.push_back(std::move(cand));
  }
  return out;
}

std::size_t out_order(const FusionSystem& f) {
  const Subgroup& p = f.p_group();
  return f.aut_order(f.lattice().top_index()) / (p.order() / center(p).order());
}

}  // namespace

bool isomorphic_by_aut(const FusionSystem& a, const FusionSystem& b, const std::vector<GroupMorphism>& aut_p) {
  if (a.morphism_count() != b.morphism_count()) return false;
  for (const auto& alpha : aut_p)
    if (subsystem_equal(transport(a, alpha, b.lattice_ptr()), b)) return true;
  return false;
}

ClassificationResult enumerate_saturated(const Subgroup& p, std::size_t prime, bool realize) {
  if (p.order() > caps().classifier_order)
    throw FusionError(ErrorKind::ClassifierCapExceeded, "classifier limited to |P| <= " +
                                                            std::to_string(caps().classifier_order));
  if (!is_prime(prime) || !is_p_group(p, prime))
    throw FusionError(ErrorKind::InvalidInput, "P must be a p-group for the given prime");

  ClassificationResult result;
  result.p = p;
  result.prime = prime;
  auto& st = result.stats;
  auto lattice = std::make_shared<const SubgroupLattice>(p);
  const auto aut_p = automorphisms(p);
  const RealizedAutGroup ap = realize_aut_group(p, aut_p);

  const auto tops = top_automizers(ap, prime);
  const auto cands = essential_candidates(p, prime, lattice);
  st.top_automizers = tops.size();
  st.essential_candidates = cands.size();
  for (const auto& c : cands) st.essential_automizers += c.automizers.size();

  // Assignments are enumerated serially, built and tested in parallel, then
  // deduplicated in enumeration order.
  std::vector<std::vector<GroupMorphism>> seeds;
  for (const auto& top : tops) {
    // Mixed-radix counter: 0 means "not essential", k means automizer k-1.
    std::vector<std::size_t> choice(cands.size(), 0);
    while (true) {
      std::vector<GroupMorphism> seed = top;
      for (std::size_t j = 0; j < cands.size(); ++j)
        if (choice[j] > 0) {
          const auto& gens = cands[j].automizers[choice[j] - 1];
          seed.insert(seed.end(), gens.begin(), gens.end());
        }
      seeds.push_back(std::move(seed));
      std::size_t j = 0;
      while (j < cands.size() && ++choice[j] > cands[j].automizers.size()) choice[j++] = 0;
      if (j == cands.size()) break;
    }
  }
  st.assignments = seeds.size();
  std::vector<std::optional<FusionSystem>> built(seeds.size());
  detail::parallel_for(seeds.size(), [&](std::size_t i) {
    FusionSystem f = generated_fusion_system(p, prime, seeds[i], lattice);
    if (is_saturated(f).saturated) built[i] = std::move(f);
  });

  std::vector<FusionSystem> found;
  for (auto& f : built) {
    if (!f) {
      ++st.unsaturated;
      continue;
    }
    ++st.saturated;
    if (std::any_of(found.begin(), found.end(), [&](const FusionSystem& g) { return isomorphic_by_aut(*f, g, aut_p); })) {
      ++st.duplicates;
      continue;
    }
    f->provenance().description = "classified";
    found.push_back(std::move(*f));
  }

  for (auto& f : found) {
    auto ess = essential_subgroups(f);
    auto flags = classify_control(f);
    const std::size_t out = out_order(f);
    result.systems.push_back({std::move(f), std::move(ess), flags, out, {}});
  }
  std::stable_sort(result.systems.begin(), result.systems.end(), [](const auto& a, const auto& b) {
    return std::make_tuple(a.essentials.rank, a.out_order, a.system.morphism_count()) <
           std::make_tuple(b.essentials.rank, b.out_order, b.system.morphism_count());
  });

  if (realize) {
    for (const auto& name : registry_names()) {
      const GroupPtr g = named_group(name);
      if (g->order() > caps().group_order || p_part(g->order(), prime) != p.order()) continue;
      const Subgroup s = sylow_subgroup(g, prime);
      const auto iso = find_isomorphism(s, p);
      if (!iso) continue;
      ++st.registry_groups_checked;
      const GroupMorphism beta(s, p, *iso);
      const FusionSystem moved = transport(fusion_system_of_group(g, s, prime), beta, lattice);
      for (auto& cs : result.systems) {
        if (cs.system.morphism_count() != moved.morphism_count()) continue;
        for (const auto& alpha : aut_p)
          if (subsystem_equal(transport(moved, alpha, lattice), cs.system)) {
            cs.realizations.push_back({name, compose(alpha, beta).inverse()});
            break;
          }
      }
    }
  }
  return result;
}

bool is_resistant(const Subgroup& p, std::size_t prime) {
  const auto r = enumerate_saturated(p, prime, false);
  return std::all_of(r.systems.begin(), r.systems.end(), [](const auto& s) { return s.flags.controlled; });
}

bool is_fusion_trivial(const Subgroup& p, std::size_t prime) {
  return enumerate_saturated(p, prime, false).systems.size() == 1;
}

}  // namespace fusion
