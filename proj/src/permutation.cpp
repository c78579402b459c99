#include "fusion/permutation.hpp"

#include <numeric>
#include <sstream>

#include "fusion/error.hpp"

namespace fusion {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) throw FusionError(ErrorKind::MalformedPermutation, "degree must be positive");
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw FusionError(ErrorKind::MalformedPermutation, "image sequence is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::size_t>>& cycles,
                                     bool one_based) {
  Permutation result = identity(degree);
  for (const auto& cycle : cycles) {
    std::vector<Point> im(degree);
    std::iota(im.begin(), im.end(), Point{0});
    std::vector<bool> used(degree, false);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      std::size_t a = cycle[k];
      std::size_t b = cycle[(k + 1) % cycle.size()];
      if (one_based) {
        if (a == 0 || b == 0)
          throw FusionError(ErrorKind::MalformedPermutation, "point 0 in a 1-based cycle");
        --a;
        --b;
      }
      if (a >= degree || b >= degree)
        throw FusionError(ErrorKind::MalformedPermutation, "cycle point exceeds degree");
      if (used[a]) throw FusionError(ErrorKind::MalformedPermutation, "repeated point in cycle");
      used[a] = true;
      im[a] = static_cast<Point>(b);
    }
    result = Permutation(std::move(im)) * result;
  }
  return result;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  std::vector<Point> im(images_.size());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = images_[rhs.images_[i]];
  Permutation out;
  out.images_ = std::move(im);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<Point> im(images_.size());
  for (std::size_t i = 0; i < im.size(); ++i) im[images_[i]] = static_cast<Point>(i);
  Permutation out;
  out.images_ = std::move(im);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::cycle_string(bool one_based) const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) os << ',';
      os << c[k] + (one_based ? 1 : 0);
    }
    os << ')';
  }
  return os.str();
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Point x : p.images()) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace fusion
