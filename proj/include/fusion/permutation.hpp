#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fusion {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}, stored as its image sequence.
class Permutation {
 public:
  Permutation() = default;

  /// Throws MalformedPermutation unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds from cycles; when they overlap the first listed acts first.
  /// Points are 1-based when `one_based` is set (file format), else 0-based.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::size_t>>& cycles,
                                 bool one_based);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  /// Function composition: (a * b)(i) = a(b(i)).
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;

  /// Disjoint cycle notation, fixed points omitted; "()" for the identity.
  std::string cycle_string(bool one_based = true) const;

  /// Cycles of length > 1, each starting at its smallest point.
  std::vector<std::vector<Point>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace fusion
