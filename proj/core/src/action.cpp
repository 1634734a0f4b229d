#include "pmaps/action.hpp"

#include <numeric>

#include "pmaps/errors.hpp"

namespace pmaps {

bool is_transitive(std::size_t degree, std::span<const Permutation> gens) {
  if (degree == 0) return true;
  std::vector<std::uint8_t> seen(degree, 0);
  std::vector<Point> orbit{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& s : gens) {
      Point y = s[orbit[i]];
      if (!seen[y]) {
        seen[y] = 1;
        orbit.push_back(y);
      }
    }
  }
  return orbit.size() == degree;
}

std::vector<Point> minimal_block_partition(std::size_t degree,
                                           std::span<const Permutation> gens,
                                           Point b) {
  // union-find closure of the pair {0, b} under the generators
  std::vector<Point> parent(degree);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<std::pair<Point, Point>> pending{{0, b}};
  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    Point rx = find(x);
    Point ry = find(y);
    if (rx == ry) continue;
    parent[ry] = rx;
    for (const auto& s : gens) pending.emplace_back(s[x], s[y]);
  }
  std::vector<Point> labels(degree);
  for (Point i = 0; i < degree; ++i) labels[i] = find(i);
  return labels;
}

bool is_primitive(std::size_t degree, std::span<const Permutation> gens) {
  if (!is_transitive(degree, gens)) {
    throw ContractViolation("primitivity is only defined for transitive actions");
  }
  for (Point b = 1; b < degree; ++b) {
    auto labels = minimal_block_partition(degree, gens, b);
    for (Point i = 0; i < degree; ++i) {
      if (labels[i] != labels[0]) return false;
    }
  }
  return true;
}

}  // namespace pmaps
