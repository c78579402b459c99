#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "fusion/classifier.hpp"
#include "fusion/essential.hpp"
#include "fusion/fusion_system.hpp"
#include "fusion/saturation.hpp"

namespace fusion {

using Json = nlohmann::ordered_json;

/// {"degree": n, "generators": [[[1,2],[3,4]], ...], "label": "..."} with
/// 1-based cycles. Throws InvalidInput.
GroupPtr group_from_json(const Json& j);
GroupPtr load_group_file(const std::string& path);
Json group_to_json(const GroupPtr& g);

/// "(1,2)(3,4)" or "(1 2)(3 4)", 1-based; "()" is the identity.
Permutation parse_cycles(std::string_view text, std::size_t degree);
/// Element of g written in cycle notation. Throws InvalidInput if not in g.
Elem parse_element(const GroupPtr& g, std::string_view text);

std::string element_string(const FiniteGroup& g, Elem e);
/// {"order", "generators"}.
Json subgroup_to_json(const Subgroup& s);
/// Generator images: {"domain", "codomain", "pairs": [[x, phi(x)], ...]}.
Json morphism_to_json(const GroupMorphism& phi);

/// Subgroup table and every homset; `compact` lists only Aut_F(Q)
/// generators per F-class representative.
Json fusion_system_to_json(const FusionSystem& f, bool compact = false);

Json saturation_report_to_json(const SaturationReport& r);
Json essential_report_to_json(const EssentialReport& r);
Json control_flags_to_json(const ControlFlags& c);
Json factorization_to_json(const FactorizationWitness& w);
Json classification_to_json(const ClassificationResult& r, bool with_stats);

/// {"tool", "version", "caps"} embedded in every report.
Json report_header();

}  // namespace fusion
