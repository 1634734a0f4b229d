#include "pmaps/permutation.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

#include "pmaps/errors.hpp"

namespace pmaps {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<std::uint8_t> seen(images_.size(), 0);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw ContractViolation("image sequence is not a bijection");
    }
    seen[x] = 1;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), Point{0});
  return p;
}

Permutation Permutation::from_cycles(
    std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  Permutation p = identity(degree);
  std::vector<std::uint8_t> used(degree, 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i];
      Point to = cycle[(i + 1) % cycle.size()];
      if (from == 0 || from > degree || to == 0 || to > degree) {
        throw ContractViolation("cycle point out of range");
      }
      if (used[from - 1]) {
        throw ContractViolation("point " + std::to_string(from) +
                                " repeated in cycles");
      }
      used[from - 1] = 1;
      p.images_[from - 1] = to - 1;
    }
  }
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    p.images_[images_[i]] = static_cast<Point>(i);
  }
  return p;
}

std::size_t Permutation::order() const {
  // lcm of cycle lengths
  std::vector<std::uint8_t> seen(images_.size(), 0);
  std::size_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation Permutation::extended(std::size_t degree) const {
  if (degree < images_.size()) {
    throw ContractViolation("cannot shrink a permutation");
  }
  Permutation p = identity(degree);
  std::copy(images_.begin(), images_.end(), p.images_.begin());
  return p;
}

Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
  if (lhs.degree() != rhs.degree()) {
    throw ContractViolation("degree mismatch in permutation product");
  }
  Permutation p;
  p.images_.resize(lhs.degree());
  for (std::size_t i = 0; i < lhs.degree(); ++i) {
    p.images_[i] = rhs.images_[lhs.images_[i]];
  }
  return p;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<std::uint8_t> seen(images_.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    os << '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      if (j != i) os << ' ';
      os << j + 1;
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.to_cycle_string();
}

std::uint64_t hash_images(std::span<const Point> images) noexcept {
  // FNV-1a over the 32-bit images
  std::uint64_t h = 14695981039346656037ULL;
  for (Point x : images) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace pmaps
