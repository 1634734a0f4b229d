#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace pmaps {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}. Points are stored 0-based and printed
/// 1-based in cycle notation.
///
/// Products compose left to right: `(p * q)(i) == q(p(i))`, so permutations
/// act on the right and conjugation `x^y` is `y.inverse() * x * y`.
class Permutation {
 public:
  Permutation() = default;

  /// Throws ContractViolation unless `images` is a bijection of its index set.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation of the given degree from 1-based cycles.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  std::size_t order() const;

  /// Returns a copy acting as the identity on the extra points.
  Permutation extended(std::size_t degree) const;

  friend Permutation operator*(const Permutation& lhs, const Permutation& rhs);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  /// 1-based disjoint cycle notation, "()" for the identity.
  std::string to_cycle_string() const;

 private:
  std::vector<Point> images_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

std::uint64_t hash_images(std::span<const Point> images) noexcept;

}  // namespace pmaps

template <>
struct std::hash<pmaps::Permutation> {
  std::size_t operator()(const pmaps::Permutation& p) const noexcept {
    return static_cast<std::size_t>(pmaps::hash_images(p.images()));
  }
};
