#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "fusion/audit.hpp"
#include "fusion/classifier.hpp"
#include "fusion/config.hpp"
#include "fusion/error.hpp"
#include "fusion/essential.hpp"
#include "fusion/local_structure.hpp"
#include "fusion/registry.hpp"
#include "fusion/saturation.hpp"
#include "fusion/serialize.hpp"
#include "fusion/subgroups.hpp"
#include "fusion/transfer.hpp"

using namespace fusion;

namespace {

constexpr int kUsage = 2;
constexpr int kCap = 3;
constexpr int kDisagreement = 4;
constexpr int kFailures = 1;

struct Options {
  std::string group;
  std::string group_file;
  std::size_t prime = 0;
  std::string output;
  bool full = false;
  bool stats = false;
  std::string domain;
  std::string images;
  std::string suite = "all";
  std::string corpus;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GroupPtr load_group(const Options& o) {
  if (o.group.empty() == o.group_file.empty()) throw UsageError("give exactly one of --group or --group-file");
  if (o.prime == 0) throw UsageError("--prime is required");
  return o.group.empty() ? load_group_file(o.group_file) : named_group(o.group);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, sep);)
    if (part.find_first_not_of(" \t") != std::string::npos) out.push_back(part);
  return out;
}

Json header(std::string_view command) {
  Json j = report_header();
  j["command"] = command;
  return j;
}

Json describe_group(const GroupPtr& g) { return Json{{"label", g->label()}, {"order", g->order()}}; }

Json cmd_registry() {
  Json j = header("registry");
  Json groups = Json::array();
  for (const auto& name : registry_names()) groups.push_back(describe_group(named_group(name)));
  j["groups"] = groups;
  return j;
}

Json cmd_compute(const Options& o) {
  const GroupPtr g = load_group(o);
  const Subgroup p = sylow_subgroup(g, o.prime);
  const FusionSystem f = fusion_system_of_group(g, p, o.prime);
  const SaturationReport sat = is_saturated(f);
  Json j = header("compute");
  j["group"] = describe_group(g);
  j["prime"] = o.prime;
  j["p_group"] = subgroup_to_json(p);
  j["saturation"] = saturation_report_to_json(sat);
  j["center"] = subgroup_to_json(center(f));
  j["focal"] = subgroup_to_json(system_focal(f, FocalKind::focal));
  j["hyperfocal"] = subgroup_to_json(system_focal(f, FocalKind::hyperfocal));
  j["o_p"] = subgroup_to_json(o_p(f));
  j["constrained"] = is_constrained(f);
  j["control"] = control_flags_to_json(classify_control(f));
  j["essentials"] = essential_report_to_json(essential_subgroups(f));
  j["system"] = fusion_system_to_json(f, !o.full);
  return j;
}

Json cmd_essentials(const Options& o) {
  const GroupPtr g = load_group(o);
  const FusionSystem f = fusion_system_of_group(g, sylow_subgroup(g, o.prime), o.prime);
  Json j = header("essentials");
  j["group"] = describe_group(g);
  j["prime"] = o.prime;
  j["report"] = essential_report_to_json(essential_subgroups(f));
  return j;
}

Json cmd_factorize(const Options& o) {
  const GroupPtr g = load_group(o);
  const Subgroup p = sylow_subgroup(g, o.prime);
  const auto dom = split(o.domain, ';');
  const auto img = split(o.images, ';');
  if (dom.empty() || dom.size() != img.size())
    throw UsageError("--domain and --images need the same number of ';'-separated elements");
  std::vector<std::pair<Elem, Elem>> pairs;
  std::vector<Elem> gens;
  for (std::size_t k = 0; k < dom.size(); ++k) {
    pairs.emplace_back(parse_element(g, dom[k]), parse_element(g, img[k]));
    gens.push_back(pairs.back().first);
  }
  const Subgroup domain = generate_subgroup(g, gens);
  if (!p.contains(domain)) throw FusionError(ErrorKind::InvalidInput, "domain is not inside the Sylow subgroup");
  const GroupMorphism phi = GroupMorphism::from_generator_images(domain, p, pairs);
  const FusionSystem f = fusion_system_of_group(g, p, o.prime);
  AlperinFactorizer fac(f);
  Json j = header("factorize");
  j["group"] = describe_group(g);
  j["prime"] = o.prime;
  j["witness"] = factorization_to_json(fac.factorize(phi));
  return j;
}

Json cmd_classify(const Options& o) {
  const GroupPtr g = load_group(o);
  const Subgroup p = sylow_subgroup(g, o.prime);
  Json j = header("classify");
  j["group"] = describe_group(g);
  j["result"] = classification_to_json(enumerate_saturated(p, o.prime), o.stats);
  return j;
}

Json cmd_check(const Options& o, bool& failed) {
  const auto corpus = load_corpus(o.corpus.empty() ? default_corpus_path() : o.corpus);
  std::vector<std::string> names;
  if (o.suite == "all") names = suite_names();
  else names = split(o.suite, ',');
  Json j = header("check");
  Json suites = Json::object();
  std::size_t failures = 0;
  for (const auto& name : names) {
    Json entries = Json::array();
    std::size_t passed = 0;
    for (const auto& r : run_suite(name, corpus)) {
      entries.push_back(Json{{"group", r.group}, {"prime", r.prime}, {"pass", r.pass}, {"detail", r.detail}});
      passed += r.pass;
    }
    failures += entries.size() - passed;
    suites[name] = Json{{"passed", passed}, {"total", entries.size()}, {"entries", entries}};
  }
  j["suites"] = suites;
  j["failures"] = failures;
  failed = failures > 0;
  return j;
}

void emit(const Json& j, const std::string& path) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw FusionError(ErrorKind::InvalidInput, "cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fusion systems of finite groups: saturation, local structure, transfer and classification."};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Options o;

  std::string names;
  for (const auto& n : registry_names()) names += (names.empty() ? "" : ", ") + n;
  const std::string group_help = "Registry name, one of: " + names;

  auto add_group = [&](CLI::App* sub, bool needs_prime) {
    sub->add_option("--group", o.group, group_help);
    sub->add_option("--group-file", o.group_file, "JSON group file: {degree, generators, label}");
    auto* p = sub->add_option("--prime", o.prime, "The prime p");
    if (needs_prime) p->required();
    sub->add_option("-o,--output", o.output, "Write the JSON report here instead of stdout");
  };

  auto* registry = app.add_subcommand("registry", "List registry groups with their orders");
  registry->add_option("-o,--output", o.output, "Write the JSON report here instead of stdout");
  auto* compute = app.add_subcommand("compute", "Summarize F_P(G): saturation, Z(F), foc, hyp, O_p(F), control");
  add_group(compute, true);
  compute->add_flag("--full", o.full, "Include every homset instead of the per-class automizer generators");
  auto* essentials = app.add_subcommand("essentials", "Essential subgroups of F_P(G)");
  add_group(essentials, true);
  auto* factorize = app.add_subcommand("factorize", "Alperin factorization of a morphism in F_P(G)");
  add_group(factorize, true);
  factorize->add_option("--domain", o.domain, "Domain generators, e.g. \"(1,2)(3,4);(1,3)(2,4)\"")->required();
  factorize->add_option("--images", o.images, "Their images, in the same order")->required();
  auto* classify = app.add_subcommand("classify", "All saturated fusion systems on a Sylow p-subgroup");
  add_group(classify, true);
  classify->add_flag("--stats", o.stats, "Add search statistics");
  auto* check = app.add_subcommand("check", "Run theorem-audit suites over the corpus manifest");
  check->add_option("--suite", o.suite, "Comma-separated suite names or \"all\"");
  check->add_option("--corpus", o.corpus, "Corpus manifest (default: FUSION_CORPUS or the bundled one)");
  check->add_option("-o,--output", o.output, "Write the JSON report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    set_caps(caps_from_environment(caps()));
    bool failed = false;
    Json report;
    if (registry->parsed()) report = cmd_registry();
    else if (compute->parsed()) report = cmd_compute(o);
    else if (essentials->parsed()) report = cmd_essentials(o);
    else if (factorize->parsed()) report = cmd_factorize(o);
    else if (classify->parsed()) report = cmd_classify(o);
    else report = cmd_check(o, failed);
    emit(report, o.output);
    return failed ? kFailures : 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const FusionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (is_cap_error(e.kind())) return kCap;
    if (is_disagreement_error(e.kind())) return kDisagreement;
    return kUsage;
  }
}
