#pragma once

#include <cstddef>
#include <string_view>

namespace fusion {

inline constexpr std::string_view kVersion = "0.3.0";

/// Size limits shared by every algorithm in the library. Exceeding one of
/// them raises the matching *CapExceeded error; nothing is truncated.
struct Caps {
  std::size_t group_order = 5000;       // enumerated groups
  std::size_t lattice_order = 512;      // all_subgroups input order
  std::size_t map_domain = 64;          // all_injective_homs domain order
  std::size_t classifier_order = 64;    // enumerate_saturated input order
  std::size_t direct_embedding = 2000;  // direct strongly p-embedded search
};

const Caps& caps();
void set_caps(const Caps& c);

/// Reads FUSION_GROUP_CAP, FUSION_LATTICE_CAP, FUSION_MAP_CAP,
/// FUSION_CLASSIFIER_CAP and FUSION_DIRECT_EMBEDDING_CAP on top of `base`.
Caps caps_from_environment(Caps base = {});

/// Temporarily replaces the global caps; restores on destruction.
class ScopedCaps {
 public:
  explicit ScopedCaps(const Caps& c) : saved_(caps()) { set_caps(c); }
  ~ScopedCaps() { set_caps(saved_); }
  ScopedCaps(const ScopedCaps&) = delete;
  ScopedCaps& operator=(const ScopedCaps&) = delete;

 private:
  Caps saved_;
};

}  // namespace fusion
