#include "pmaps/algmap.hpp"

#include <array>
#include <utility>

#include "pmaps/errors.hpp"
#include "pmaps/hom.hpp"
#include "pmaps/quotient.hpp"

namespace pmaps {

namespace {

bool is_involution_or_one(const FiniteGroup& g, Elem x) {
  return g.mul(x, x) == FiniteGroup::identity();
}

bool generates(const FiniteGroup& g, std::span<const Elem> elems) {
  return subgroup_generated(g, elems).order() == g.order();
}

long long genus_of(bool orientable, long long euler) {
  return orientable ? (2 - euler) / 2 : 2 - euler;
}

std::shared_ptr<const FiniteGroup> share(FiniteGroup g) {
  return std::make_shared<const FiniteGroup>(std::move(g));
}

}  // namespace

std::string_view to_string(GenusKind kind) {
  switch (kind) {
    case GenusKind::orientable_genus:
      return "orientable_genus";
    case GenusKind::crosscap_number:
      return "crosscap_number";
    case GenusKind::degenerate:
      return "degenerate";
  }
  return "?";
}

OrientedMap::OrientedMap(std::shared_ptr<const FiniteGroup> group, Elem r,
                         Elem l, bool allow_degenerate)
    : group_(std::move(group)), r_(r), l_(l) {
  if (!group_) throw ContractViolation("map without a group");
  const FiniteGroup& g = *group_;
  if (r_ >= g.order() || l_ >= g.order()) {
    throw ContractViolation("map generator is not a group element");
  }
  if (!is_involution_or_one(g, l_)) {
    throw ContractViolation("arc reversal l is not an involution");
  }
  degeneracy_.l_trivial = l_ == FiniteGroup::identity();
  degeneracy_.r_trivial = r_ == FiniteGroup::identity();
  if (degeneracy_.any() && !allow_degenerate) {
    throw ContractViolation("trivial map generator");
  }
  std::array<Elem, 2> gens{r_, l_};
  if (!generates(g, gens)) {
    throw ContractViolation("r and l do not generate the group");
  }
}

OrientedMap OrientedMap::mirror() const {
  return OrientedMap(group_, group_->inv(r_), l_, degenerate());
}

FlaggedMap::FlaggedMap(std::shared_ptr<const FiniteGroup> group, Elem t, Elem r,
                       Elem l, bool allow_degenerate)
    : group_(std::move(group)), t_(t), r_(r), l_(l) {
  if (!group_) throw ContractViolation("map without a group");
  const FiniteGroup& g = *group_;
  if (t_ >= g.order() || r_ >= g.order() || l_ >= g.order()) {
    throw ContractViolation("map generator is not a group element");
  }
  if (!is_involution_or_one(g, t_) || !is_involution_or_one(g, r_) ||
      !is_involution_or_one(g, l_)) {
    throw ContractViolation("t, r and l must be involutions");
  }
  if (g.mul(t_, l_) != g.mul(l_, t_)) {
    throw ContractViolation("t and l do not commute");
  }
  degeneracy_.t_trivial = t_ == FiniteGroup::identity();
  degeneracy_.r_trivial = r_ == FiniteGroup::identity();
  degeneracy_.l_trivial = l_ == FiniteGroup::identity();
  degeneracy_.l_equals_t = l_ == t_ && !degeneracy_.l_trivial;
  if ((degeneracy_.t_trivial || degeneracy_.r_trivial ||
       degeneracy_.l_trivial) &&
      !allow_degenerate) {
    throw ContractViolation("trivial map generator");
  }
  std::array<Elem, 3> gens{t_, r_, l_};
  if (!generates(g, gens)) {
    throw ContractViolation("t, r and l do not generate the group");
  }
}

Subgroup vertex_stabilizer(const OrientedMap& m) {
  return subgroup_generated(m.group(), {m.r()});
}

Subgroup vertex_stabilizer(const FlaggedMap& m) {
  return subgroup_generated(m.group(), {m.t(), m.r()});
}

VefCounts vef_counts(const OrientedMap& m) {
  const FiniteGroup& g = m.group();
  const std::size_t n = g.order();
  return {n / g.element_order(m.r()), n / g.element_order(m.l()),
          n / g.element_order(g.mul(m.r(), m.l()))};
}

VefCounts vef_counts(const FlaggedMap& m) {
  const FiniteGroup& g = m.group();
  const std::size_t n = g.order();
  return {n / subgroup_generated(g, {m.t(), m.r()}).order(),
          n / subgroup_generated(g, {m.t(), m.l()}).order(),
          n / subgroup_generated(g, {m.r(), m.l()}).order()};
}

Subgroup even_word_subgroup(const FlaggedMap& m) {
  const FiniteGroup& g = m.group();
  return subgroup_generated(g, {g.mul(m.t(), m.r()), g.mul(m.r(), m.l())});
}

bool is_orientable(const FlaggedMap& m) {
  return index(m.group(), even_word_subgroup(m)) == 2;
}

bool is_reflexible(const OrientedMap& m) {
  const FiniteGroup& g = m.group();
  std::array<Elem, 2> src{m.r(), m.l()};
  std::array<Elem, 2> dst{g.inv(m.r()), m.l()};
  return automorphism_exists(g, src, dst);
}

bool maps_isomorphic(const OrientedMap& a, const OrientedMap& b) {
  auto ta = a.tuple();
  auto tb = b.tuple();
  return isomorphism_exists(a.group(), ta, b.group(), tb);
}

bool maps_isomorphic(const FlaggedMap& a, const FlaggedMap& b) {
  auto ta = a.tuple();
  auto tb = b.tuple();
  return isomorphism_exists(a.group(), ta, b.group(), tb);
}

bool simple_graph(const OrientedMap& m) {
  if (m.degenerate()) throw ContractViolation("simple_graph of a degenerate map");
  const FiniteGroup& g = m.group();
  Subgroup h = vertex_stabilizer(m);
  return intersection(g, h, conjugate(g, h, m.l())).order() == 1;
}

bool simple_graph(const FlaggedMap& m) {
  if (m.degenerate()) throw ContractViolation("simple_graph of a degenerate map");
  const FiniteGroup& g = m.group();
  Subgroup h = vertex_stabilizer(m);
  Subgroup meet = intersection(g, h, conjugate(g, h, m.l()));
  return meet == subgroup_generated(g, {m.t()});
}

MapReport report(const OrientedMap& m) {
  MapReport rep;
  VefCounts c = vef_counts(m);
  rep.vertices = c.vertices;
  rep.edges = c.edges;
  rep.faces = c.faces;
  rep.euler = static_cast<long long>(c.vertices) -
              static_cast<long long>(c.edges) + static_cast<long long>(c.faces);
  rep.orientable = true;
  rep.valency = m.group().element_order(m.r());
  if (m.degenerate()) {
    rep.genus_kind = GenusKind::degenerate;
    rep.simple_graph = false;
  } else {
    rep.genus_kind = GenusKind::orientable_genus;
    rep.genus = genus_of(true, rep.euler);
    rep.simple_graph = simple_graph(m);
  }
  rep.reflexible = is_reflexible(m);
  return rep;
}

MapReport report(const FlaggedMap& m) {
  MapReport rep;
  VefCounts c = vef_counts(m);
  rep.vertices = c.vertices;
  rep.edges = c.edges;
  rep.faces = c.faces;
  rep.euler = static_cast<long long>(c.vertices) -
              static_cast<long long>(c.edges) + static_cast<long long>(c.faces);
  rep.orientable = is_orientable(m);
  std::size_t stab = vertex_stabilizer(m).order();
  rep.valency = stab > 1 ? stab / 2 : 1;
  if (m.degenerate()) {
    rep.genus_kind = GenusKind::degenerate;
    rep.simple_graph = false;
  } else {
    rep.genus_kind = rep.orientable ? GenusKind::orientable_genus
                                    : GenusKind::crosscap_number;
    rep.genus = genus_of(rep.orientable, rep.euler);
    rep.simple_graph = simple_graph(m);
  }
  return rep;
}

OrientedMap quotient_map(const OrientedMap& m, const Subgroup& n) {
  QuotientGroup q = quotient_group(m.group(), n);
  Elem r = q.projection(m.r());
  Elem l = q.projection(m.l());
  return OrientedMap(share(std::move(q.group)), r, l, true);
}

FlaggedMap quotient_map(const FlaggedMap& m, const Subgroup& n) {
  QuotientGroup q = quotient_group(m.group(), n);
  Elem t = q.projection(m.t());
  Elem r = q.projection(m.r());
  Elem l = q.projection(m.l());
  return FlaggedMap(share(std::move(q.group)), t, r, l, true);
}

std::optional<OrientedMap> oriented_of_flagged(const FlaggedMap& m) {
  if (m.degenerate() || !is_orientable(m)) return std::nullopt;
  const FiniteGroup& g = m.group();
  auto plus = share(as_group(g, even_word_subgroup(m)));
  auto rotation = plus->find(g.images(g.mul(m.t(), m.r())));
  auto reversal = plus->find(g.images(g.mul(m.t(), m.l())));
  if (!rotation || !reversal) {
    throw std::logic_error("even-word generator missing from its subgroup");
  }
  return OrientedMap(plus, *rotation, *reversal);
}

std::optional<FlaggedMap> flagged_of_reflexible(const OrientedMap& m) {
  if (m.degenerate()) return std::nullopt;
  const FiniteGroup& g = m.group();
  std::array<Elem, 2> src{m.r(), m.l()};
  std::array<Elem, 2> dst{g.inv(m.r()), m.l()};
  auto sigma = extend_tuple(g, src, g, dst);
  if (!sigma || !sigma->is_injective(g.order())) return std::nullopt;

  const std::size_t n = g.order();
  auto right_mult = [&](Elem x) {
    std::vector<Point> im(n + 2);
    for (Elem y = 0; y < n; ++y) im[y] = g.mul(y, x);
    im[n] = static_cast<Point>(n);
    im[n + 1] = static_cast<Point>(n + 1);
    return Permutation(std::move(im));
  };
  std::vector<Point> s_im(n + 2);
  for (Elem y = 0; y < n; ++y) s_im[y] = (*sigma)(y);
  s_im[n] = static_cast<Point>(n + 1);
  s_im[n + 1] = static_cast<Point>(n);
  Permutation s(std::move(s_im));
  Permutation rr = right_mult(m.r());
  Permutation rl = right_mult(m.l());

  auto ext = share(FiniteGroup::closure(n + 2, {rr, rl, s}));
  auto t = ext->find(s);
  auto r = ext->find(s * rr);
  auto l = ext->find(s * rl);
  if (!t || !r || !l) throw std::logic_error("extension generator not found");
  return FlaggedMap(ext, *t, *r, *l);
}

}  // namespace pmaps
