#include "pmaps/group.hpp"

#include <algorithm>
#include <deque>

#include "pmaps/errors.hpp"

namespace pmaps {

FiniteGroup FiniteGroup::closure(std::size_t degree,
                                 std::vector<Permutation> generators,
                                 std::size_t max_order) {
  for (const auto& p : generators) {
    if (p.degree() != degree) {
      throw ContractViolation("generator degree " + std::to_string(p.degree()) +
                              " differs from group degree " +
                              std::to_string(degree));
    }
  }
  FiniteGroup g;
  g.degree_ = degree;
  g.gens_ = std::move(generators);
  const std::size_t ngens = g.gens_.size();

  auto id = Permutation::identity(degree);
  g.data_.assign(id.images().begin(), id.images().end());
  g.lookup_.emplace(hash_images(id.images()), 0);
  g.parent_.push_back(0);
  g.via_.push_back(0);
  g.order_ = 1;

  std::vector<Point> row(degree);
  for (std::size_t x = 0; x < g.order_; ++x) {
    for (std::size_t s = 0; s < ngens; ++s) {
      const Point* src = g.data_.data() + x * degree;
      auto gen = g.gens_[s].images();
      for (std::size_t k = 0; k < degree; ++k) row[k] = gen[src[k]];
      auto found = g.find(row);
      if (found) {
        g.right_.push_back(*found);
        continue;
      }
      if (g.order_ >= max_order) {
        throw ResourceError("group order exceeds bound", max_order);
      }
      auto idx = static_cast<Elem>(g.order_++);
      g.data_.insert(g.data_.end(), row.begin(), row.end());
      g.lookup_.emplace(hash_images(row), idx);
      g.parent_.push_back(static_cast<Elem>(x));
      g.via_.push_back(static_cast<std::uint32_t>(s));
      g.right_.push_back(idx);
    }
  }
  for (const auto& p : g.gens_) g.gen_elems_.push_back(*g.find(p));
  g.build_tables();
  return g;
}

void FiniteGroup::build_tables() {
  inverse_.resize(order_);
  orders_.resize(order_);
  for (std::size_t x = 0; x < order_; ++x) {
    Permutation p(std::vector<Point>(images(static_cast<Elem>(x)).begin(),
                                     images(static_cast<Elem>(x)).end()));
    inverse_[x] = *find(p.inverse());
    orders_[x] = static_cast<std::uint32_t>(p.order());
  }
  if (order_ > kTableOrderLimit) return;
  const std::size_t n = order_;
  const std::size_t ngens = gens_.size();
  table_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    Elem* row = table_.data() + x * n;
    row[0] = static_cast<Elem>(x);
    for (std::size_t y = 1; y < n; ++y) {
      row[y] = right_[row[parent_[y]] * ngens + via_[y]];
    }
  }
}

std::span<const Point> FiniteGroup::images(Elem x) const {
  return {data_.data() + static_cast<std::size_t>(x) * degree_, degree_};
}

Permutation FiniteGroup::element(Elem x) const {
  auto im = images(x);
  return Permutation(std::vector<Point>(im.begin(), im.end()));
}

std::optional<Elem> FiniteGroup::find(std::span<const Point> im) const {
  if (im.size() != degree_) return std::nullopt;
  auto [lo, hi] = lookup_.equal_range(hash_images(im));
  for (auto it = lo; it != hi; ++it) {
    auto cand = images(it->second);
    if (std::equal(cand.begin(), cand.end(), im.begin())) return it->second;
  }
  return std::nullopt;
}

Elem FiniteGroup::mul(Elem x, Elem y) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(x) * order_ + y];
  // walk the BFS word of y starting from x
  thread_local std::vector<std::uint32_t> word;
  word.clear();
  for (Elem z = y; z != 0; z = parent_[z]) word.push_back(via_[z]);
  Elem acc = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it) acc = right_gen(acc, *it);
  return acc;
}

Elem FiniteGroup::pow(Elem x, long long n) const {
  if (n < 0) {
    x = inv(x);
    n = -n;
  }
  n %= static_cast<long long>(orders_[x]);
  Elem result = identity();
  Elem base = x;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

// --- Subgroup -------------------------------------------------------------

Subgroup Subgroup::trivial(const FiniteGroup& g) {
  return subgroup_generated(g, std::span<const Elem>{});
}

Subgroup Subgroup::whole(const FiniteGroup& g) {
  Subgroup h;
  h.member_.assign(g.order(), 1);
  h.elements_.resize(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) h.elements_[i] = static_cast<Elem>(i);
  auto gens = g.generator_elements();
  h.gens_.assign(gens.begin(), gens.end());
  return h;
}

Subgroup Subgroup::from_members(const FiniteGroup& g,
                                std::vector<std::uint8_t> members) {
  if (members.size() != g.order()) {
    throw ContractViolation("member flags do not match group order");
  }
  std::vector<Elem> gens;
  Subgroup current = Subgroup::trivial(g);
  for (std::size_t x = 0; x < members.size(); ++x) {
    if (!members[x] || current.contains(static_cast<Elem>(x))) continue;
    gens.push_back(static_cast<Elem>(x));
    current = subgroup_generated(g, gens);
  }
  if (current.member_ != members) {
    throw ContractViolation("member set is not closed under multiplication");
  }
  return current;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](Elem x) { return other.contains(x); });
}

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Elem> gens) {
  Subgroup h;
  h.member_.assign(g.order(), 0);
  h.gens_.assign(gens.begin(), gens.end());
  for (Elem x : gens) {
    if (x >= g.order()) throw ContractViolation("element index out of range");
  }
  std::vector<Elem> queue{g.identity()};
  h.member_[g.identity()] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Elem s : gens) {
      Elem y = g.mul(queue[i], s);
      if (!h.member_[y]) {
        h.member_[y] = 1;
        queue.push_back(y);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  h.elements_ = std::move(queue);
  return h;
}

Subgroup intersection(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<std::uint8_t> flags(g.order(), 0);
  for (Elem x : a.elements()) flags[x] = b.contains(x) ? 1 : 0;
  return Subgroup::from_members(g, std::move(flags));
}

Subgroup join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return subgroup_generated(g, gens);
}

Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, Elem y) {
  std::vector<Elem> gens;
  for (Elem x : h.generators()) gens.push_back(g.conj(x, y));
  return subgroup_generated(g, gens);
}

std::vector<std::vector<Elem>> cosets(const FiniteGroup& g, const Subgroup& h,
                                      CosetSide side) {
  std::vector<std::uint8_t> assigned(g.order(), 0);
  std::vector<std::vector<Elem>> result;
  result.reserve(g.order() / h.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (assigned[x]) continue;
    std::vector<Elem> block;
    block.reserve(h.order());
    for (Elem k : h.elements()) {
      Elem y = side == CosetSide::right ? g.mul(k, static_cast<Elem>(x))
                                        : g.mul(static_cast<Elem>(x), k);
      assigned[y] = 1;
      block.push_back(y);
    }
    std::sort(block.begin(), block.end());
    result.push_back(std::move(block));
  }
  return result;
}

std::vector<std::vector<Point>> point_orbits(const FiniteGroup& g,
                                             const Subgroup& h) {
  std::vector<std::uint8_t> seen(g.degree(), 0);
  std::vector<std::vector<Point>> result;
  for (Point start = 0; start < g.degree(); ++start) {
    if (seen[start]) continue;
    std::vector<Point> orbit{start};
    seen[start] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (Elem s : h.generators()) {
        Point y = g.images(s)[orbit[i]];
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h, const Subgroup& ambient) {
  for (Elem y : ambient.generators()) {
    for (Elem x : h.generators()) {
      if (!h.contains(g.conj(x, y))) return false;
    }
  }
  return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  return is_normal(g, h, Subgroup::whole(g));
}

Subgroup normal_core(const FiniteGroup& g, const Subgroup& h,
                     const Subgroup& ambient) {
  // shrink K <- K cap K^y over generators y until stable
  Subgroup core = h;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem y : ambient.generators()) {
      std::vector<std::uint8_t> flags(g.order(), 0);
      Elem yi = g.inv(y);
      std::size_t kept = 0;
      for (Elem x : core.elements()) {
        // x in K^y  <=>  y x y^-1 in K
        if (core.contains(g.mul(g.mul(y, x), yi))) {
          flags[x] = 1;
          ++kept;
        }
      }
      if (kept != core.order()) {
        core = Subgroup::from_members(g, std::move(flags));
        changed = true;
      }
    }
  }
  return core;
}

Subgroup normal_core(const FiniteGroup& g, const Subgroup& h) {
  return normal_core(g, h, Subgroup::whole(g));
}

Subgroup normal_closure(const FiniteGroup& g, std::span<const Elem> seeds,
                        const Subgroup& ambient) {
  std::vector<Elem> gens(seeds.begin(), seeds.end());
  Subgroup k = subgroup_generated(g, gens);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (Elem y : ambient.generators()) {
        Elem c = g.conj(gens[i], y);
        if (!k.contains(c)) {
          gens.push_back(c);
          k = subgroup_generated(g, gens);
          changed = true;
        }
      }
    }
  }
  return k;
}

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a,
                             const Subgroup& b) {
  std::vector<Elem> seeds;
  for (Elem x : a.generators()) {
    for (Elem y : b.generators()) {
      Elem c = g.comm(x, y);
      if (c != g.identity()) seeds.push_back(c);
    }
  }
  return normal_closure(g, seeds, join(g, a, b));
}

Subgroup derived_subgroup(const FiniteGroup& g, const Subgroup& h) {
  return commutator_subgroup(g, h, h);
}

std::vector<Subgroup> derived_series(const FiniteGroup& g, const Subgroup& h) {
  std::vector<Subgroup> series{h};
  while (true) {
    Subgroup next = derived_subgroup(g, series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subgroup> derived_series(const FiniteGroup& g) {
  return derived_series(g, Subgroup::whole(g));
}

bool is_solvable(const FiniteGroup& g, const Subgroup& h) {
  return derived_series(g, h).back().order() == 1;
}

bool is_solvable(const FiniteGroup& g) { return is_solvable(g, Subgroup::whole(g)); }

bool is_abelian(const FiniteGroup& g, const Subgroup& h) {
  const auto& gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
    }
  }
  return true;
}

FiniteGroup as_group(const FiniteGroup& g, const Subgroup& h) {
  std::vector<Permutation> gens;
  for (Elem x : h.generators()) gens.push_back(g.element(x));
  return FiniteGroup::closure(g.degree(), std::move(gens));
}

std::vector<Permutation> coset_action(const FiniteGroup& g, const Subgroup& h,
                                      std::span<const Elem> elems) {
  auto blocks = cosets(g, h, CosetSide::right);
  std::vector<Point> label(g.order());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (Elem x : blocks[i]) label[x] = static_cast<Point>(i);
  }
  std::vector<Permutation> result;
  result.reserve(elems.size());
  for (Elem x : elems) {
    std::vector<Point> im(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      im[i] = label[g.mul(blocks[i].front(), x)];
    }
    result.emplace_back(std::move(im));
  }
  return result;
}

}  // namespace pmaps
