#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "fusion/audit.hpp"
#include "fusion/error.hpp"
#include "fusion/saturation.hpp"
#include "fusion/serialize.hpp"
#include "helpers.hpp"

using namespace fusion;
using namespace testing_support;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const FusionError& e) {
    return e.kind();
  }
  FAIL("no FusionError thrown");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("cycle notation parses with commas or spaces") {
  const auto a = parse_cycles("(1,2)(3,4)", 5);
  const auto b = parse_cycles(" (1 2) ( 3 4 ) ", 5);
  CHECK(a == b);
  CHECK(a == Permutation::from_cycles(5, {{1, 2}, {3, 4}}, true));
  CHECK(parse_cycles("()", 3) == Permutation::from_cycles(3, {}, true));
  CHECK(parse_cycles("", 3) == Permutation::from_cycles(3, {}, true));
  CHECK(a.cycle_string(true) == "(1,2)(3,4)");
  CHECK(kind_of([] { parse_cycles("(1,6)", 5); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { parse_cycles("(1,2", 5); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { parse_cycles("1,2)", 5); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { parse_cycles("(1,x)", 5); }) == ErrorKind::InvalidInput);
}

TEST_CASE("parse_element rejects permutations outside the group") {
  const auto g = named_group("A4");
  CHECK(parse_element(g, "(1,2,3)") == el(g, {{1, 2, 3}}));
  CHECK(kind_of([&] { parse_element(g, "(1,2)"); }) == ErrorKind::InvalidInput);
}

TEST_CASE("group JSON round-trips through a file") {
  for (const char* name : {"S4", "GL(3,2)", "C3wrC3", "SL(2,3)"}) {
    const auto g = named_group(name);
    const Json j = group_to_json(g);
    CHECK(j["order"] == g->order());
    const std::string path = std::string("roundtrip_") + std::to_string(g->order()) + ".json";
    std::ofstream(path) << j.dump();
    const auto h = load_group_file(path);
    std::remove(path.c_str());
    CHECK(h->order() == g->order());
    CHECK(h->degree() == g->degree());
    CHECK(h->label() == g->label());
    for (Elem e = 0; e < g->order(); ++e) CHECK(h->index_of(g->element(e)) == e);
  }
  CHECK(kind_of([] { load_group_file("/nonexistent/group.json"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { group_from_json(Json{{"degree", 3}, {"generators", {{{1, 4}}}}}); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { group_from_json(Json{{"generators", Json::array()}}); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { group_from_json(Json{{"degree", 0}, {"generators", Json::array()}}); }) == ErrorKind::InvalidInput);
}

TEST_CASE("morphisms extend from generator images") {
  const auto g = named_group("S4");
  const auto v = gen(g, {{{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}});
  const Elem a = el(g, {{1, 2}, {3, 4}}), b = el(g, {{1, 3}, {2, 4}});
  const auto swap = GroupMorphism::from_generator_images(v, v, {{a, b}, {b, a}});
  CHECK(swap(el(g, {{1, 4}, {2, 3}})) == el(g, {{1, 4}, {2, 3}}));
  CHECK(swap.is_automorphism());
  // Same map as the explicit table.
  std::vector<std::pair<Elem, Elem>> table;
  for (Elem x : v.members()) table.emplace_back(x, swap(x));
  CHECK(GroupMorphism::from_pairs(v, v, table) == swap);
  // Not a homomorphism: both generators to a.
  CHECK(kind_of([&] { GroupMorphism::from_generator_images(v, v, {{a, a}, {b, a}}); }) == ErrorKind::InvalidInput);
  // Sources do not generate the domain.
  CHECK(kind_of([&] { GroupMorphism::from_generator_images(v, v, {{a, b}}); }) == ErrorKind::InvalidInput);
  // C4 -> C4 squaring map is not injective.
  const auto c4 = gen(g, {{{1, 2, 3, 4}}});
  const Elem r = el(g, {{1, 2, 3, 4}});
  CHECK(kind_of([&] { GroupMorphism::from_generator_images(c4, c4, {{r, g->mul(r, r)}}); }) == ErrorKind::InvalidInput);
}

TEST_CASE("fusion system JSON carries the homset tables") {
  const auto g = Subgroup::whole(named_group("S4"));
  const auto p = sylow_subgroup(g, 2);
  const auto f = fusion_system_of_group(g, p, 2);
  const Json full = fusion_system_to_json(f, false);
  CHECK(full["subgroups"].size() == f.lattice().size());
  std::size_t maps = 0;
  for (const auto& h : full["homsets"]) maps += h["maps"].size();
  CHECK(maps == f.morphism_count());
  CHECK(full["morphism_count"] == f.morphism_count());

  const Json compact = fusion_system_to_json(f, true);
  std::size_t covered = 0;
  for (const auto& c : compact["classes"]) {
    covered += c["class_size"].get<std::size_t>();
    // Generators span a group of the stated order, which is at least 1.
    CHECK(c["aut_order"].get<std::size_t>() >= 1);
    if (c["aut_order"] == 1) CHECK(c["aut_generators"].empty());
  }
  CHECK(covered == f.lattice().size());
  // Deterministic output.
  CHECK(fusion_system_to_json(f, true).dump() == compact.dump());

  const Json sat = saturation_report_to_json(is_saturated(f));
  CHECK(sat["saturated"] == true);
  CHECK(sat["definitions"].size() == 4);
}

TEST_CASE("report header names the tool and caps") {
  const Json h = report_header();
  CHECK(h["tool"] == "fusion");
  CHECK(h["version"] == std::string(kVersion));
  CHECK(h["caps"]["group_order"] == caps().group_order);
}

TEST_CASE("audit suites run over a small corpus") {
  const std::vector<CorpusEntry> corpus{{"S4", 2}, {"S4", 3}, {"A5", 2}, {"GL(3,2)", 2}, {"C3wrC3", 3}};
  CHECK(suite_names().size() == 11);
  for (const auto& name : suite_names()) {
    const auto records = run_suite(name, corpus);
    REQUIRE(records.size() == corpus.size());
    for (std::size_t k = 0; k < records.size(); ++k) {
      INFO(name, " ", records[k].group, " p=", records[k].prime, ": ", records[k].detail);
      CHECK(records[k].pass);
      CHECK(records[k].suite == name);
      CHECK(records[k].group == corpus[k].group);
    }
  }
  CHECK(kind_of([&] { run_suite("nonsense", corpus); }) == ErrorKind::InvalidInput);
}
