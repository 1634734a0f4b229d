#include "pmaps/pgroup.hpp"

#include <stdexcept>

#include "pmaps/errors.hpp"
#include "pmaps/numtheory.hpp"

namespace pmaps {

namespace {

bool normalises(const FiniteGroup& g, Elem x, const Subgroup& h) {
  for (Elem s : h.generators()) {
    if (!h.contains(g.conj(s, x))) return false;
  }
  return true;
}

void require_p_group(const Subgroup& h, std::uint64_t p) {
  if (!is_prime(p)) throw ContractViolation(std::to_string(p) + " is not prime");
  if (!is_p_group(h, p)) {
    throw ContractViolation("subgroup of order " + std::to_string(h.order()) +
                            " is not a " + std::to_string(p) + "-group");
  }
}

}  // namespace

Subgroup sylow_p(const FiniteGroup& g, const Subgroup& ambient, std::uint64_t p) {
  if (!is_prime(p)) throw ContractViolation(std::to_string(p) + " is not prime");
  const std::uint64_t target = p_part(ambient.order(), p);
  Subgroup current = Subgroup::trivial(g);
  std::vector<Elem> gens;
  // While P is not Sylow, p divides |N(P) : P|, so N(P) \ P holds a
  // p-element and the scan below always finds one.
  while (current.order() < target) {
    bool grown = false;
    for (Elem x : ambient.elements()) {
      if (current.contains(x) || !is_power_of(g.element_order(x), p)) continue;
      if (!normalises(g, x, current)) continue;
      gens.push_back(x);
      current = subgroup_generated(g, gens);
      grown = true;
      break;
    }
    if (!grown) throw std::logic_error("sylow_p: no normalising p-element");
  }
  return current;
}

Subgroup sylow_p(const FiniteGroup& g, std::uint64_t p) {
  return sylow_p(g, Subgroup::whole(g), p);
}

Subgroup o_p(const FiniteGroup& g, const Subgroup& ambient, std::uint64_t p) {
  return normal_core(g, sylow_p(g, ambient, p), ambient);
}

Subgroup o_p(const FiniteGroup& g, std::uint64_t p) {
  return o_p(g, Subgroup::whole(g), p);
}

bool is_p_group(const Subgroup& h, std::uint64_t p) {
  return is_power_of(h.order(), p);
}

bool has_normal_sylow(const FiniteGroup& g, const Subgroup& ambient,
                      std::uint64_t p) {
  return o_p(g, ambient, p).order() == p_part(ambient.order(), p);
}

Subgroup center(const FiniteGroup& g, const Subgroup& h) {
  std::vector<std::uint8_t> flags(g.order(), 0);
  for (Elem x : h.elements()) {
    bool central = true;
    for (Elem s : h.generators()) {
      if (g.mul(x, s) != g.mul(s, x)) {
        central = false;
        break;
      }
    }
    flags[x] = central ? 1 : 0;
  }
  return Subgroup::from_members(g, std::move(flags));
}

Subgroup center(const FiniteGroup& g) { return center(g, Subgroup::whole(g)); }

unsigned nilpotency_class(const FiniteGroup& g, const Subgroup& p_group,
                          std::uint64_t p) {
  require_p_group(p_group, p);
  Subgroup z = Subgroup::trivial(g);
  unsigned c = 0;
  while (z.order() != p_group.order()) {
    std::vector<std::uint8_t> flags(g.order(), 0);
    for (Elem x : p_group.elements()) {
      bool next = true;
      for (Elem s : p_group.generators()) {
        if (!z.contains(g.comm(x, s))) {
          next = false;
          break;
        }
      }
      flags[x] = next ? 1 : 0;
    }
    Subgroup bigger = Subgroup::from_members(g, std::move(flags));
    if (bigger.order() == z.order()) {
      throw std::logic_error("upper central series stalled on a p-group");
    }
    z = std::move(bigger);
    ++c;
  }
  return c;
}

Subgroup omega1(const FiniteGroup& g, const Subgroup& p_group, std::uint64_t p) {
  require_p_group(p_group, p);
  std::vector<Elem> gens;
  for (Elem x : p_group.elements()) {
    if (x != g.identity() && g.element_order(x) == p) gens.push_back(x);
  }
  return subgroup_generated(g, gens);
}

Subgroup frattini_p(const FiniteGroup& g, const Subgroup& p_group,
                    std::uint64_t p) {
  require_p_group(p_group, p);
  std::vector<Elem> gens = derived_subgroup(g, p_group).generators();
  for (Elem x : p_group.elements()) {
    Elem y = g.pow(x, static_cast<long long>(p));
    if (y != g.identity()) gens.push_back(y);
  }
  return subgroup_generated(g, gens);
}

bool is_extraspecial(const FiniteGroup& g, const Subgroup& p_group,
                     std::uint64_t p) {
  require_p_group(p_group, p);
  Subgroup z = center(g, p_group);
  if (z.order() != p) return false;
  return derived_subgroup(g, p_group) == z && frattini_p(g, p_group, p) == z;
}

}  // namespace pmaps
