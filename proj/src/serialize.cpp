#include "fusion/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "fusion/config.hpp"
#include "fusion/error.hpp"
#include "fusion/subgroups.hpp"

namespace fusion {

namespace {

[[noreturn]] void bad(const std::string& what) { throw FusionError(ErrorKind::InvalidInput, what); }

Json aut_generators_json(const FusionSystem& f, std::size_t i) {
  const Subgroup& q = f.lattice()[i];
  // Greedy generating set of Aut_F(Q): keep a map when it enlarges the span.
  std::vector<GroupMorphism> gens;
  std::vector<GroupMorphism> span{GroupMorphism::identity(q)};
  for (const auto& a : f.automorphisms(i)) {
    if (std::find(span.begin(), span.end(), a) != span.end()) continue;
    gens.push_back(a);
    for (std::size_t k = 0; k < span.size(); ++k)
      for (const auto& g : gens) {
        auto c = compose(g, span[k]);
        if (std::find(span.begin(), span.end(), c) == span.end()) span.push_back(c);
      }
  }
  Json out = Json::array();
  for (const auto& g : gens) out.push_back(morphism_to_json(g)["pairs"]);
  return out;
}

}  // namespace

GroupPtr group_from_json(const Json& j) {
  try {
    const std::size_t degree = j.at("degree").get<std::size_t>();
    if (degree == 0) bad("degree must be positive");
    std::vector<Permutation> gens;
    for (const auto& g : j.at("generators")) {
      auto cycles = g.get<std::vector<std::vector<std::size_t>>>();
      for (const auto& c : cycles)
        for (std::size_t x : c)
          if (x < 1 || x > degree) bad("point " + std::to_string(x) + " outside 1.." + std::to_string(degree));
      gens.push_back(Permutation::from_cycles(degree, cycles, true));
    }
    return FiniteGroup::generate(degree, std::move(gens), j.value("label", std::string{}));
  } catch (const Json::exception& e) {
    bad(std::string("malformed group file: ") + e.what());
  }
}

GroupPtr load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open group file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    bad("group file " + path + " is not JSON: " + e.what());
  }
  return group_from_json(j);
}

Json group_to_json(const GroupPtr& g) {
  Json gens = Json::array();
  for (const auto& p : g->generators()) {
    Json cycles = Json::array();
    for (const auto& c : p.cycles()) {
      Json cyc = Json::array();
      for (auto x : c) cyc.push_back(x + 1);
      cycles.push_back(cyc);
    }
    gens.push_back(cycles);
  }
  return Json{{"label", g->label()}, {"degree", g->degree()}, {"order", g->order()}, {"generators", gens}};
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') bad("expected '(' in \"" + std::string(text) + "\"");
    ++i;
    std::vector<std::size_t> cyc;
    while (true) {
      skip();
      if (i >= text.size()) bad("unterminated cycle in \"" + std::string(text) + "\"");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) bad("unexpected character in \"" + std::string(text) + "\"");
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
      if (v < 1 || v > degree) bad("point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      cyc.push_back(v);
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip();
  }
  return Permutation::from_cycles(degree, cycles, true);
}

Elem parse_element(const GroupPtr& g, std::string_view text) {
  auto e = g->index_of(parse_cycles(text, g->degree()));
  if (!e) bad("\"" + std::string(text) + "\" is not an element of " + g->label());
  return *e;
}

std::string element_string(const FiniteGroup& g, Elem e) { return g.element(e).cycle_string(true); }

Json subgroup_to_json(const Subgroup& s) {
  Json gens = Json::array();
  for (Elem e : generating_set(s)) gens.push_back(element_string(s.group(), e));
  return Json{{"order", s.order()}, {"generators", gens}};
}

Json morphism_to_json(const GroupMorphism& phi) {
  Json pairs = Json::array();
  const FiniteGroup& src = phi.domain().group();
  const FiniteGroup& dst = phi.codomain().group();
  for (Elem e : generating_set(phi.domain()))
    pairs.push_back(Json::array({element_string(src, e), element_string(dst, phi(e))}));
  return Json{{"domain", subgroup_to_json(phi.domain())},
              {"codomain", subgroup_to_json(phi.codomain())},
              {"pairs", pairs}};
}

Json fusion_system_to_json(const FusionSystem& f, bool compact) {
  const SubgroupLattice& L = f.lattice();
  Json out{{"prime", f.prime()},
           {"p_group", subgroup_to_json(f.p_group())},
           {"provenance", {{"kind", to_string(f.provenance().kind)},
                           {"description", f.provenance().description},
                           {"notes", f.provenance().notes}}},
           {"morphism_count", f.morphism_count()}};
  if (compact) {
    const auto part = f_conjugacy(f);
    Json classes = Json::array();
    for (std::size_t c = 0; c < part.subgroup_classes.size(); ++c) {
      const std::size_t rep = part.representatives[c];
      classes.push_back(Json{{"representative", subgroup_to_json(L[rep])},
                             {"class_size", part.subgroup_classes[c].size()},
                             {"aut_order", f.aut_order(rep)},
                             {"aut_generators", aut_generators_json(f, rep)}});
    }
    out["classes"] = classes;
    return out;
  }
  Json subgroups = Json::array();
  for (std::size_t i = 0; i < L.size(); ++i) {
    Json s = subgroup_to_json(L[i]);
    s["index"] = i;
    subgroups.push_back(s);
  }
  Json homsets = Json::array();
  const FiniteGroup& G = f.p_group().group();
  for (std::size_t i = 0; i < L.size(); ++i) {
    const auto gens = generating_set(L[i]);
    Json maps = Json::array();
    for (std::size_t k = 0; k < f.maps_from(i).size(); ++k) {
      Json images = Json::array();
      for (Elem e : gens) images.push_back(element_string(G, f.maps_from(i)[k][*L[i].position(e)]));
      maps.push_back(Json{{"to", f.image_index(i, k)}, {"images", images}});
    }
    Json domain_gens = Json::array();
    for (Elem e : gens) domain_gens.push_back(element_string(G, e));
    homsets.push_back(Json{{"from", i}, {"generators", domain_gens}, {"maps", maps}});
  }
  out["subgroups"] = subgroups;
  out["homsets"] = homsets;
  return out;
}

Json saturation_report_to_json(const SaturationReport& r) {
  static const char* names[] = {"conjugate_automized_receptive", "conjugate_normalized_receptive",
                                "normalized_receptive", "centralized_receptive"};
  Json defs = Json::object();
  for (std::size_t k = 0; k < 4; ++k) {
    if (!r.verdicts[k]) continue;
    Json d{{"saturated", *r.verdicts[k]}};
    if (r.witnesses[k]) d["witness"] = Json{{"subgroup", r.witnesses[k]->subgroup}, {"reason", r.witnesses[k]->reason}};
    defs[names[k]] = d;
  }
  Json out{{"saturated", r.saturated}, {"definitions", defs}};
  if (r.witness) out["witness"] = r.witness->reason;
  return out;
}

Json essential_report_to_json(const EssentialReport& r) {
  Json classes = Json::array();
  for (const auto& c : r.classes)
    classes.push_back(Json{{"representative", subgroup_to_json(c.subgroup)},
                           {"class_size", c.members.size()},
                           {"out_order", c.out_order}});
  return Json{{"rank", r.rank}, {"classes", classes}};
}

Json control_flags_to_json(const ControlFlags& c) {
  return Json{{"trivial", c.trivial}, {"controlled", c.controlled}, {"constrained", c.constrained}};
}

Json factorization_to_json(const FactorizationWitness& w) {
  Json steps = Json::array();
  for (const auto& s : w.steps)
    steps.push_back(Json{{"through", subgroup_to_json(s.q)},
                         {"automorphism", morphism_to_json(s.aut)["pairs"]},
                         {"restricted_to", subgroup_to_json(s.domain)}});
  return Json{{"target", morphism_to_json(w.target)}, {"length", w.steps.size()}, {"steps", steps}};
}

Json classification_to_json(const ClassificationResult& r, bool with_stats) {
  Json systems = Json::array();
  for (const auto& s : r.systems) {
    Json reals = Json::array();
    for (const auto& re : s.realizations) reals.push_back(re.group);
    systems.push_back(Json{{"essential_rank", s.essentials.rank},
                           {"out_order", s.out_order},
                           {"morphism_count", s.system.morphism_count()},
                           {"control", control_flags_to_json(s.flags)},
                           {"essentials", essential_report_to_json(s.essentials)},
                           {"realizations", reals.empty() ? Json("unrealized in registry") : reals},
                           {"system", fusion_system_to_json(s.system, true)}});
  }
  Json out{{"p_group", subgroup_to_json(r.p)}, {"prime", r.prime}, {"count", r.systems.size()}, {"systems", systems}};
  if (with_stats) {
    const auto& st = r.stats;
    out["stats"] = Json{{"top_automizers", st.top_automizers},
                        {"essential_candidates", st.essential_candidates},
                        {"essential_automizers", st.essential_automizers},
                        {"assignments", st.assignments},
                        {"saturated", st.saturated},
                        {"unsaturated", st.unsaturated},
                        {"duplicates", st.duplicates},
                        {"registry_groups_checked", st.registry_groups_checked}};
  }
  return out;
}

Json report_header() {
  const Caps& c = caps();
  return Json{{"tool", "fusion"},
              {"version", std::string(kVersion)},
              {"caps", {{"group_order", c.group_order},
                        {"lattice_order", c.lattice_order},
                        {"map_domain", c.map_domain},
                        {"classifier_order", c.classifier_order},
                        {"direct_embedding", c.direct_embedding}}}};
}

}  // namespace fusion
