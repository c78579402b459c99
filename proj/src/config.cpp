#include "fusion/config.hpp"

#include <cstdlib>
#include <string>

#include "fusion/error.hpp"

namespace fusion {

namespace {

Caps& global_caps() {
  static Caps c;
  return c;
}

void read_cap(const char* name, std::size_t& slot) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0)
    throw FusionError(ErrorKind::InvalidInput, std::string("bad value for ") + name + ": " + raw);
  slot = static_cast<std::size_t>(v);
}

}  // namespace

const Caps& caps() { return global_caps(); }

void set_caps(const Caps& c) { global_caps() = c; }

Caps caps_from_environment(Caps base) {
  read_cap("FUSION_GROUP_CAP", base.group_order);
  read_cap("FUSION_LATTICE_CAP", base.lattice_order);
  read_cap("FUSION_MAP_CAP", base.map_domain);
  read_cap("FUSION_CLASSIFIER_CAP", base.classifier_order);
  read_cap("FUSION_DIRECT_EMBEDDING_CAP", base.direct_embedding);
  return base;
}

}  // namespace fusion
