#pragma once

#include <vector>

#include "doctest.h"
#include "fusion/registry.hpp"
#include "fusion/subgroups.hpp"

namespace testing_support {

using Cycles = std::vector<std::vector<std::size_t>>;

inline fusion::Elem el(const fusion::GroupPtr& g, const Cycles& cycles) {
  auto e = g->index_of(fusion::Permutation::from_cycles(g->degree(), cycles, true));
  REQUIRE(e.has_value());
  return *e;
}

inline fusion::Subgroup gen(const fusion::GroupPtr& g, const std::vector<Cycles>& gens) {
  std::vector<fusion::Elem> es;
  for (auto& c : gens) es.push_back(el(g, c));
  return fusion::generate_subgroup(g, es);
}

inline fusion::Subgroup whole(const char* name) { return fusion::Subgroup::whole(fusion::named_group(name)); }

}  // namespace testing_support
