#pragma once

#include <functional>
#include <vector>

#include "fusion/group.hpp"

namespace fusion::detail {

/// Visits every injective homomorphism domain -> codomain, as images aligned
/// with domain.members(), in lexicographic order of generator images.
/// The two subgroups may live in different groups. `visit` returns false to
/// stop the search early.
void for_each_injective_hom(const Subgroup& domain, const Subgroup& codomain,
                            const std::function<bool(const std::vector<Elem>&)>& visit);

/// Extends generator images to a homomorphism on <gens>; returns images
/// aligned with domain.members(), or nothing if the assignment is not a
/// well-defined injective homomorphism. `gens` must generate `domain`.
std::optional<std::vector<Elem>> extend_generator_images(const Subgroup& domain,
                                                         const std::vector<Elem>& gens,
                                                         const FiniteGroup& target,
                                                         const std::vector<Elem>& images);

}  // namespace fusion::detail
