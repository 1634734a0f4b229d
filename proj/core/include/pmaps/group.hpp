#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "pmaps/permutation.hpp"

namespace pmaps {

/// Index of an element inside its FiniteGroup.
using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultMaxOrder = 1'000'000;

/// Groups up to this order keep a full multiplication table.
inline constexpr std::size_t kTableOrderLimit = 4096;

/// A permutation group with every element enumerated.
///
/// Elements are numbered in breadth-first discovery order starting from the
/// identity (index 0), right-multiplying by the generators in input order.
/// Instances are immutable once built.
class FiniteGroup {
 public:
  /// Throws ResourceError when the group has more than `max_order` elements
  /// and ContractViolation when a generator has the wrong degree.
  static FiniteGroup closure(std::size_t degree,
                             std::vector<Permutation> generators,
                             std::size_t max_order = kDefaultMaxOrder);

  std::size_t order() const noexcept { return order_; }
  std::size_t degree() const noexcept { return degree_; }

  const std::vector<Permutation>& generators() const noexcept { return gens_; }
  /// Element index of each generator, parallel to generators().
  std::span<const Elem> generator_elements() const noexcept { return gen_elems_; }

  static constexpr Elem identity() noexcept { return 0; }

  std::span<const Point> images(Elem x) const;
  Permutation element(Elem x) const;
  std::optional<Elem> find(std::span<const Point> images) const;
  std::optional<Elem> find(const Permutation& p) const { return find(p.images()); }

  Elem mul(Elem x, Elem y) const;
  Elem inv(Elem x) const { return inverse_[x]; }
  Elem pow(Elem x, long long n) const;
  /// x^y = y^-1 x y
  Elem conj(Elem x, Elem y) const { return mul(mul(inv(y), x), y); }
  /// [x, y] = x^-1 y^-1 x y
  Elem comm(Elem x, Elem y) const {
    return mul(mul(inv(x), inv(y)), mul(x, y));
  }
  std::size_t element_order(Elem x) const { return orders_[x]; }

  /// x * generator(g) without touching the full table.
  Elem right_gen(Elem x, std::size_t g) const {
    return right_[x * gens_.size() + g];
  }

  bool has_table() const noexcept { return !table_.empty(); }

 private:
  FiniteGroup() = default;
  void build_tables();

  std::size_t degree_ = 0;
  std::size_t order_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Elem> gen_elems_;
  std::vector<Point> data_;  // order_ * degree_ images, row per element
  std::unordered_multimap<std::uint64_t, Elem> lookup_;
  std::vector<Elem> right_;   // order_ * |gens|
  std::vector<Elem> parent_;  // BFS tree: x == parent_[x] * gens_[via_[x]]
  std::vector<std::uint32_t> via_;
  std::vector<Elem> table_;  // order_ * order_ when order_ <= kTableOrderLimit
  std::vector<Elem> inverse_;
  std::vector<std::uint32_t> orders_;
};

/// A subgroup of a FiniteGroup given by its member set. Does not keep a
/// reference to the parent; operations take the parent explicitly.
class Subgroup {
 public:
  Subgroup() = default;

  static Subgroup trivial(const FiniteGroup& g);
  static Subgroup whole(const FiniteGroup& g);
  /// `members` must already be closed under multiplication. A generating
  /// set is chosen greedily by least index.
  static Subgroup from_members(const FiniteGroup& g,
                               std::vector<std::uint8_t> members);

  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(Elem x) const { return member_[x] != 0; }
  /// Members in increasing index order.
  const std::vector<Elem>& elements() const noexcept { return elements_; }
  const std::vector<Elem>& generators() const noexcept { return gens_; }
  std::span<const std::uint8_t> member_flags() const noexcept { return member_; }

  bool is_subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.member_ == b.member_;
  }

 private:
  friend Subgroup subgroup_generated(const FiniteGroup&, std::span<const Elem>);
  std::vector<std::uint8_t> member_;
  std::vector<Elem> elements_;
  std::vector<Elem> gens_;
};

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Elem> gens);
inline Subgroup subgroup_generated(const FiniteGroup& g,
                                   std::initializer_list<Elem> gens) {
  return subgroup_generated(g, std::span<const Elem>(gens.begin(), gens.size()));
}

Subgroup intersection(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

/// Smallest subgroup containing both.
Subgroup join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

/// H^y = y^-1 H y
Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, Elem y);

enum class CosetSide { right, left };

/// Partition of the group into cosets Hx (right) or xH (left). Each block is
/// sorted and blocks are ordered by their least element, which is also the
/// representative.
std::vector<std::vector<Elem>> cosets(const FiniteGroup& g, const Subgroup& h,
                                      CosetSide side = CosetSide::right);

/// Orbits of `h` on the points the group acts on, ordered by least point.
std::vector<std::vector<Point>> point_orbits(const FiniteGroup& g,
                                             const Subgroup& h);

inline std::size_t index(const FiniteGroup& g, const Subgroup& h) {
  return g.order() / h.order();
}

/// Whether `h` is normalised by every element of `ambient` (which must
/// contain `h`).
bool is_normal(const FiniteGroup& g, const Subgroup& h, const Subgroup& ambient);
bool is_normal(const FiniteGroup& g, const Subgroup& h);

/// Intersection of the conjugates of `h` by elements of `ambient`.
Subgroup normal_core(const FiniteGroup& g, const Subgroup& h,
                     const Subgroup& ambient);
Subgroup normal_core(const FiniteGroup& g, const Subgroup& h);

/// Smallest subgroup of `ambient` containing `seeds` that `ambient`
/// normalises.
Subgroup normal_closure(const FiniteGroup& g, std::span<const Elem> seeds,
                        const Subgroup& ambient);

/// [A, B]: normal closure in <A, B> of the commutators of generators.
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a,
                             const Subgroup& b);

Subgroup derived_subgroup(const FiniteGroup& g, const Subgroup& h);

/// H, H', H'', ... stopping before the first term equal to its predecessor.
std::vector<Subgroup> derived_series(const FiniteGroup& g, const Subgroup& h);
std::vector<Subgroup> derived_series(const FiniteGroup& g);
bool is_solvable(const FiniteGroup& g, const Subgroup& h);
bool is_solvable(const FiniteGroup& g);

bool is_abelian(const FiniteGroup& g, const Subgroup& h);

/// Materialises a subgroup as a FiniteGroup on the same points, generated
/// by the subgroup's generators.
FiniteGroup as_group(const FiniteGroup& g, const Subgroup& h);

/// The given elements of `g` as permutations of the right cosets of `h`,
/// acting by right multiplication. Cosets are numbered as in cosets(g, h).
std::vector<Permutation> coset_action(const FiniteGroup& g, const Subgroup& h,
                                      std::span<const Elem> elems);

}  // namespace pmaps
