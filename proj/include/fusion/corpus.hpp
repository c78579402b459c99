#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fusion {

struct CorpusEntry {
  std::string group;
  std::size_t prime = 0;
};

/// Reads the manifest {"entries": [{"group": name, "prime": p}, ...]}.
/// Throws InvalidInput on a malformed file.
std::vector<CorpusEntry> load_corpus(const std::string& path);

/// Manifest path baked in at build time; FUSION_CORPUS overrides it.
std::string default_corpus_path();

}  // namespace fusion
