#include "pmaps/classify.hpp"

#include <vector>

#include "pmaps/action.hpp"
#include "pmaps/errors.hpp"
#include "pmaps/numtheory.hpp"
#include "pmaps/pgroup.hpp"
#include "pmaps/quotient.hpp"

namespace pmaps {

namespace {

constexpr std::size_t kLiftSearchLimit = 1 << 16;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

template <class Map>
std::pair<std::uint64_t, unsigned> require_p_map(const Map& m) {
  auto pk = detect_p_map(m);
  if (!pk) throw ContractViolation("vertex count is not a prime power");
  return *pk;
}

ExceptionalCase identify_quotient(const OrientedMap& q, std::uint64_t p) {
  if (p != 2) {
    throw TheoremViolation("nonnormal orientably-regular map with p = " +
                           std::to_string(p));
  }
  if (vef_counts(q).vertices != 2) {
    throw TheoremViolation("quotient of a nonnormal 2-map is not a dipole");
  }
  return identify_dipole(q);
}

ExceptionalCase identify_quotient(const FlaggedMap& q, std::uint64_t p) {
  if (p == 3) {
    if (!identify_c32(q)) {
      throw TheoremViolation("quotient of a nonnormal 3-map is not C(3,2)");
    }
    return C32{};
  }
  if (p != 2) {
    throw TheoremViolation("nonnormal regular map with p = " + std::to_string(p));
  }
  switch (vef_counts(q).vertices) {
    case 1:
      return std::visit([](auto s) -> ExceptionalCase { return s; },
                        identify_semistar(q));
    case 2:
      return identify_dipole(q);
    default:
      throw TheoremViolation("quotient of a nonnormal 2-map has too many vertices");
  }
}

OrientationStatus orientation_of(const OrientedMap& m, std::uint64_t) {
  return is_reflexible(m) ? OrientationStatus::reflexible
                          : OrientationStatus::chiral;
}

OrientationStatus orientation_of(const FlaggedMap& m, std::uint64_t p) {
  if (!is_orientable(m)) return OrientationStatus::nonorientable;
  if (has_normal_sylow(m.group(), even_word_subgroup(m), p)) {
    return OrientationStatus::orientable_normal;
  }
  return OrientationStatus::reflexible;
}

template <class Map>
PMapClassification classify_impl(const Map& m) {
  auto [p, k] = require_p_map(m);
  const FiniteGroup& g = m.group();
  PMapClassification c;
  c.p = p;
  c.k = k;
  c.solvable = is_solvable(g);
  if (!c.solvable) throw TheoremViolation("p-map group is not solvable");
  Subgroup sylow = sylow_p(g, p);
  Subgroup core = o_p(g, p);
  c.normal = core.order() == sylow.order();
  if (c.normal != is_normal(g, sylow)) {
    throw TheoremViolation("O_p disagrees with Sylow normality");
  }
  auto q = quotient_map(m, core);
  c.quotient_order = q.group().order();
  if (!c.normal) {
    try {
      c.exceptional_case = identify_quotient(q, p);
    } catch (const ClassificationError& e) {
      throw TheoremViolation(std::string("unrecognised quotient: ") + e.what());
    }
  }
  c.orientation_status = orientation_of(m, p);
  return c;
}

// Normal cyclic subgroup of odd order m = |Q|_{2'} with Q/C an elementary
// abelian 2-group.
std::optional<std::uint64_t> cyclic_by_elementary(const FiniteGroup& q) {
  const std::uint64_t n = q.order();
  const std::uint64_t two = p_part(n, 2);
  const std::uint64_t m = n / two;
  for (Elem x = 0; x < n; ++x) {
    if (q.element_order(x) != m) continue;
    Subgroup c = subgroup_generated(q, {x});
    if (!is_normal(q, c)) continue;
    bool elementary = true;
    for (Elem y = 0; y < n && elementary; ++y) {
      elementary = c.contains(q.mul(y, y));
    }
    if (elementary) return m;
  }
  return std::nullopt;
}

template <class Map>
TheoremCheck verify_main_impl(const Map& m) {
  auto [p, k] = require_p_map(m);
  (void)k;
  const FiniteGroup& g = m.group();
  TheoremCheck check;
  check.solvable = is_solvable(g);
  if (!check.solvable) throw TheoremViolation("p-map group is not solvable");
  Subgroup core = o_p(g, p);
  check.normal = core.order() == sylow_p(g, p).order();
  if (check.normal) {
    check.branch = "normal";
    return check;
  }
  QuotientGroup q = quotient_group(g, core);
  const std::size_t n = q.group.order();
  if (p == 3) {
    if (!is_s4(q.group)) {
      throw TheoremViolation("nonnormal 3-map with G/O_3(G) not S4");
    }
    check.branch = "p3_s4";
    return check;
  }
  if (p == 2) {
    const std::uint64_t two = p_part(n, 2);
    auto cyc = cyclic_by_elementary(q.group);
    if ((two == 2 || two == 4) && cyc && *cyc >= 3) {
      check.branch = two == 2 ? "p2_cyclic_by_z2" : "p2_cyclic_by_klein4";
      check.m = *cyc;
      return check;
    }
    throw TheoremViolation("nonnormal 2-map with G/O_2(G) of order " +
                           std::to_string(n) + " outside the allowed shapes");
  }
  throw TheoremViolation("nonnormal p-map with p = " + std::to_string(p));
}

template <class Map>
bool primitive_impl(const Map& m) {
  const FiniteGroup& g = m.group();
  Subgroup h = vertex_stabilizer(m);
  auto perms = coset_action(g, h, g.generator_elements());
  return is_primitive(index(g, h), perms);
}

bool is_elementary_abelian(const FiniteGroup& g, const Subgroup& h,
                           std::uint64_t p) {
  if (!is_abelian(g, h)) return false;
  for (Elem x : h.elements()) {
    if (g.pow(x, static_cast<long long>(p)) != FiniteGroup::identity()) return false;
  }
  return true;
}

// Greedy complement of p0 in an abelian P by elements of order p. Any
// elementary abelian complement lies in Omega_1(P) which the greedy cover
// reaches, so failure means none exists.
std::optional<Subgroup> elementary_complement(const FiniteGroup& g,
                                              const Subgroup& p_sub,
                                              const Subgroup& p0,
                                              std::uint64_t p) {
  Subgroup t = Subgroup::trivial(g);
  Subgroup covered = p0;
  for (Elem x : p_sub.elements()) {
    if (x == FiniteGroup::identity() || covered.contains(x)) continue;
    if (g.pow(x, static_cast<long long>(p)) != FiniteGroup::identity()) continue;
    t = join(g, t, subgroup_generated(g, {x}));
    covered = join(g, p0, t);
  }
  if (covered.order() != p_sub.order()) return std::nullopt;
  return t;
}

// Extraspecial E with E P0 = P. For odd p the only candidate is
// Omega_1(P); for p = 2 lifts of a basis of P/P0 are tried against every
// choice of P0 multiplier.
std::optional<Subgroup> extraspecial_part(const FiniteGroup& g,
                                          const Subgroup& p_sub,
                                          const Subgroup& p0,
                                          std::uint64_t p) {
  auto fits = [&](const Subgroup& e) {
    return e.order() > 1 && is_extraspecial(g, e, p) &&
           join(g, e, p0) == p_sub;
  };
  if (p != 2) {
    Subgroup e = omega1(g, p_sub, p);
    if (fits(e)) return e;
    return std::nullopt;
  }
  std::vector<Elem> basis;
  Subgroup covered = p0;
  for (Elem x : p_sub.elements()) {
    if (covered.contains(x)) continue;
    basis.push_back(x);
    covered = join(g, covered, subgroup_generated(g, {x}));
  }
  const auto& mult = p0.elements();
  std::size_t combos = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (combos > kLiftSearchLimit / mult.size()) {
      throw ResourceError("extraspecial lift search", kLiftSearchLimit);
    }
    combos *= mult.size();
  }
  std::vector<Elem> lift(basis.size());
  for (std::size_t code = 0; code < combos; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      lift[i] = g.mul(basis[i], mult[c % mult.size()]);
      c /= mult.size();
    }
    Subgroup e = subgroup_generated(g, lift);
    if (fits(e)) return e;
  }
  return std::nullopt;
}

template <class Map>
SylowStructure sylow_structure_impl(const Map& m, bool flagged) {
  auto [p, k] = require_p_map(m);
  const FiniteGroup& g = m.group();
  if (!has_normal_sylow(g, Subgroup::whole(g), p)) {
    throw ContractViolation("Sylow decomposition needs a normal p-map");
  }
  if (!primitive_impl(m)) {
    throw ContractViolation("Sylow decomposition needs a primitive vertex action");
  }
  Subgroup p_sub = sylow_p(g, p);
  Subgroup p0 = intersection(g, normal_core(g, vertex_stabilizer(m)), p_sub);

  SylowStructure s;
  s.sylow_order = p_sub.order();
  s.p0_order = p0.order();
  if (flagged && k % 2 != 0) {
    throw TheoremViolation("regular p-map with primitive vertex action and odd k");
  }
  if (is_abelian(g, p_sub)) {
    if (auto t = elementary_complement(g, p_sub, p0, p)) {
      if (is_elementary_abelian(g, *t, p) && t->order() == s.sylow_order / s.p0_order) {
        auto rank = as_prime_power(t->order());
        if (rank && rank->second == k) {
          s.case_tag = SylowCase::direct_product_elementary;
          s.complement_rank = rank->second;
          return s;
        }
      }
    }
  } else if (center(g, p_sub) == p0) {
    if (auto e = extraspecial_part(g, p_sub, p0, p)) {
      s.case_tag = SylowCase::central_product_extraspecial;
      s.extraspecial_order = e->order();
      return s;
    }
  }
  throw TheoremViolation("Sylow subgroup is neither P0 x T nor E * P0");
}

}  // namespace

std::string label(const ExceptionalCase& c) {
  return std::visit(
      overloaded{
          [](const Dipole& d) {
            return "D(" + std::to_string(d.m) + "," + std::to_string(d.e) + ")";
          },
          [](const DiscSemistar& d) { return "DM(" + std::to_string(d.order) + ")"; },
          [](const SphereSemistar& d) { return "EM(" + std::to_string(d.order) + ")"; },
          [](const C32&) { return std::string("C(3,2)"); },
      },
      c);
}

std::string_view to_string(OrientationStatus s) {
  switch (s) {
    case OrientationStatus::chiral:
      return "chiral";
    case OrientationStatus::reflexible:
      return "reflexible";
    case OrientationStatus::nonorientable:
      return "nonorientable";
    case OrientationStatus::orientable_normal:
      return "orientable_normal";
  }
  return "?";
}

std::string_view to_string(SylowCase c) {
  switch (c) {
    case SylowCase::direct_product_elementary:
      return "direct_product_elementary";
    case SylowCase::central_product_extraspecial:
      return "central_product_extraspecial";
    case SylowCase::other:
      return "other";
  }
  return "?";
}

std::optional<std::pair<std::uint64_t, unsigned>> detect_p_map(const OrientedMap& m) {
  return as_prime_power(vef_counts(m).vertices);
}

std::optional<std::pair<std::uint64_t, unsigned>> detect_p_map(const FlaggedMap& m) {
  return as_prime_power(vef_counts(m).vertices);
}

PMapClassification classify(const OrientedMap& m) { return classify_impl(m); }
PMapClassification classify(const FlaggedMap& m) { return classify_impl(m); }

Dipole identify_dipole(const OrientedMap& q) {
  if (q.degenerate()) throw ClassificationError("degenerate dipole candidate");
  if (vef_counts(q).vertices != 2) {
    throw ClassificationError("dipole candidate does not have two vertices");
  }
  const FiniteGroup& g = q.group();
  const Elem x = q.r();
  const Elem y = q.l();
  const std::uint64_t m = g.element_order(x);
  if (m < 3 || m % 2 == 0 || g.order() != 2 * m) {
    throw ClassificationError("dipole group is not Z_m : Z_2 with m odd >= 3");
  }
  const Elem target = g.conj(x, y);
  for (std::uint64_t e = 0; e < m; ++e) {
    if (g.pow(x, static_cast<long long>(e)) != target) continue;
    if (e == 1) throw ClassificationError("dipole exponent e = 1");
    if ((e * e) % m != 1) throw ClassificationError("dipole exponent with e^2 != 1");
    return {m, e};
  }
  throw ClassificationError("arc reversal does not normalise the rotation");
}

Dipole identify_dipole(const FlaggedMap& q) {
  auto oriented = oriented_of_flagged(q);
  if (!oriented) {
    throw ClassificationError("dipole candidate is degenerate or nonorientable");
  }
  return identify_dipole(*oriented);
}

std::variant<DiscSemistar, SphereSemistar> identify_semistar(const FlaggedMap& q) {
  if (vef_counts(q).vertices != 1) {
    throw ClassificationError("semistar candidate does not have one vertex");
  }
  const FiniteGroup& g = q.group();
  const std::size_t n = g.order();
  if (n % 2 != 0 || (n / 2) % 2 != 1) {
    throw ClassificationError("semistar group order is not twice an odd number");
  }
  const std::size_t half = n / 2;
  if (half > 1) {
    bool dihedral = false;
    for (Elem x = 0; x < n && !dihedral; ++x) {
      if (g.element_order(x) != half) continue;
      for (Elem y = 0; y < n && !dihedral; ++y) {
        dihedral = g.element_order(y) == 2 && g.conj(x, y) == g.inv(x);
      }
    }
    if (!dihedral) throw ClassificationError("semistar group is not dihedral");
  }
  if (q.l() == FiniteGroup::identity()) return DiscSemistar{n};
  if (q.l() == q.t()) return SphereSemistar{n};
  throw ClassificationError("semistar with l collapsed to neither 1 nor t");
}

bool is_s4(const FiniteGroup& g) {
  if (g.order() != 24) return false;
  for (Elem a = 0; a < g.order(); ++a) {
    if (g.element_order(a) != 4) continue;
    for (Elem b = 0; b < g.order(); ++b) {
      if (g.element_order(b) != 2 || g.element_order(g.mul(a, b)) != 3) continue;
      if (subgroup_generated(g, {a, b}).order() == 24) return true;
    }
  }
  return false;
}

bool identify_c32(const FlaggedMap& q) {
  if (q.group().order() != 24 || q.degenerate()) return false;
  if (vef_counts(q) != VefCounts{3, 6, 4}) return false;
  return !is_orientable(q) && is_s4(q.group());
}

TheoremCheck verify_main_theorem(const OrientedMap& m) { return verify_main_impl(m); }
TheoremCheck verify_main_theorem(const FlaggedMap& m) { return verify_main_impl(m); }

bool vertex_action_primitive(const OrientedMap& m) { return primitive_impl(m); }
bool vertex_action_primitive(const FlaggedMap& m) { return primitive_impl(m); }

SylowStructure verify_sylow_structure(const OrientedMap& m) {
  return sylow_structure_impl(m, false);
}

SylowStructure verify_sylow_structure(const FlaggedMap& m) {
  return sylow_structure_impl(m, true);
}

}  // namespace pmaps
