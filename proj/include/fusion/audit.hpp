#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fusion/corpus.hpp"

namespace fusion {

struct CheckRecord {
  std::string suite;
  std::string group;
  std::size_t prime = 0;
  bool pass = false;
  std::string detail;
};

/// focal, nilpotency, saturation, burnside, grun, yoshida, zstar, fitting,
/// local, aft, essentials.
const std::vector<std::string>& suite_names();

/// Runs one theorem-audit suite over the corpus, one record per entry.
/// Throws InvalidInput for an unknown suite; disagreement errors propagate.
std::vector<CheckRecord> run_suite(std::string_view suite, const std::vector<CorpusEntry>& corpus);

}  // namespace fusion
