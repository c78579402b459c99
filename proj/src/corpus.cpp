#include "fusion/corpus.hpp"

#include <cstdlib>
#include <fstream>

#include "fusion/error.hpp"
#include "fusion/numbers.hpp"
#include "json.hpp"

#ifndef FUSION_DEFAULT_CORPUS
#define FUSION_DEFAULT_CORPUS "data/corpus.json"
#endif

namespace fusion {

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FusionError(ErrorKind::InvalidInput, "cannot open corpus manifest " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw FusionError(ErrorKind::InvalidInput, std::string("corpus manifest: ") + e.what());
  }
  std::vector<CorpusEntry> out;
  if (!doc.contains("entries") || !doc["entries"].is_array())
    throw FusionError(ErrorKind::InvalidInput, "corpus manifest lacks an entries array");
  for (const auto& e : doc["entries"]) {
    if (!e.contains("group") || !e["group"].is_string() || !e.contains("prime") ||
        !e["prime"].is_number_unsigned())
      throw FusionError(ErrorKind::InvalidInput, "corpus entry needs a group name and a prime");
    CorpusEntry c{e["group"].get<std::string>(), e["prime"].get<std::size_t>()};
    if (!is_prime(c.prime)) throw FusionError(ErrorKind::InvalidInput, "corpus prime is not prime");
    out.push_back(std::move(c));
  }
  return out;
}

std::string default_corpus_path() {
  if (const char* env = std::getenv("FUSION_CORPUS")) return env;
  return FUSION_DEFAULT_CORPUS;
}

}  // namespace fusion
