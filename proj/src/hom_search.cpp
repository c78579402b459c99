#include "hom_search.hpp"

#include <limits>

#include "fusion/subgroups.hpp"

namespace fusion::detail {

namespace {

constexpr Elem kUnset = std::numeric_limits<Elem>::max();

/// Partial map state shared across backtracking levels.
class Extender {
 public:
  Extender(const FiniteGroup& src, const FiniteGroup& dst)
      : src_(src), dst_(dst), image_(src.order(), kUnset), used_(dst.order(), 0) {}

  /// Defines the map on <gens[0..k]> from the generator images; returns false
  /// (leaving the state clean) on inconsistency or a non-injective image.
  bool extend(const std::vector<Elem>& gens, const std::vector<Elem>& images, std::size_t k) {
    clear();
    image_[FiniteGroup::identity()] = FiniteGroup::identity();
    used_[FiniteGroup::identity()] = 1;
    touched_.push_back(FiniteGroup::identity());
    for (std::size_t i = 0; i < touched_.size(); ++i) {
      const Elem y = touched_[i];
      for (std::size_t j = 0; j <= k; ++j) {
        const Elem z = src_.mul(y, gens[j]);
        const Elem w = dst_.mul(image_[y], images[j]);
        if (image_[z] == kUnset) {
          if (used_[w]) {
            clear();
            return false;
          }
          image_[z] = w;
          used_[w] = 1;
          touched_.push_back(z);
        } else if (image_[z] != w) {
          clear();
          return false;
        }
      }
    }
    return true;
  }

  Elem image(Elem x) const { return image_[x]; }

 private:
  void clear() {
    for (Elem t : touched_) {
      used_[image_[t]] = 0;
      image_[t] = kUnset;
    }
    touched_.clear();
  }

  const FiniteGroup& src_;
  const FiniteGroup& dst_;
  std::vector<Elem> image_;
  std::vector<char> used_;
  std::vector<Elem> touched_;
};

}  // namespace

void for_each_injective_hom(const Subgroup& domain, const Subgroup& codomain,
                            const std::function<bool(const std::vector<Elem>&)>& visit) {
  if (domain.order() > codomain.order() || codomain.order() % domain.order() != 0) return;
  const FiniteGroup& src = domain.group();
  const FiniteGroup& dst = codomain.group();
  const std::vector<Elem> gens = generating_set(domain);

  if (gens.empty()) {
    visit(std::vector<Elem>{FiniteGroup::identity()});
    return;
  }

  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (Elem y : codomain.members())
      if (dst.element_order(y) == src.element_order(gens[k])) candidates[k].push_back(y);

  Extender ext(src, dst);
  std::vector<Elem> images(gens.size(), FiniteGroup::identity());
  bool stop = false;

  auto recurse = [&](auto&& self, std::size_t k) -> void {
    for (Elem c : candidates[k]) {
      if (stop) return;
      images[k] = c;
      if (!ext.extend(gens, images, k)) continue;
      if (k + 1 == gens.size()) {
        std::vector<Elem> out;
        out.reserve(domain.order());
        for (Elem x : domain.members()) out.push_back(ext.image(x));
        if (!visit(out)) stop = true;
      } else {
        self(self, k + 1);
      }
    }
  };
  recurse(recurse, 0);
}

std::optional<std::vector<Elem>> extend_generator_images(const Subgroup& domain,
                                                         const std::vector<Elem>& gens,
                                                         const FiniteGroup& target,
                                                         const std::vector<Elem>& images) {
  if (gens.empty()) return std::vector<Elem>{FiniteGroup::identity()};
  Extender ext(domain.group(), target);
  if (!ext.extend(gens, images, gens.size() - 1)) return std::nullopt;
  std::vector<Elem> out;
  out.reserve(domain.order());
  for (Elem x : domain.members()) {
    const Elem y = ext.image(x);
    if (y == kUnset) return std::nullopt;
    out.push_back(y);
  }
  return out;
}

}  // namespace fusion::detail
