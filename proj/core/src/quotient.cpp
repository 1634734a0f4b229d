#include "pmaps/quotient.hpp"

#include <stdexcept>

#include "pmaps/errors.hpp"

namespace pmaps {

QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) {
    throw ContractViolation("quotient by a subgroup that is not normal");
  }
  auto perms = coset_action(g, n, g.generator_elements());
  const std::size_t degree = g.order() / n.order();
  FiniteGroup q = FiniteGroup::closure(degree, std::move(perms));
  auto gens = q.generator_elements();
  auto projection = hom_extend(g, q, {gens.begin(), gens.end()});
  if (!projection) throw std::logic_error("coset action is not a homomorphism");
  return {std::move(q), std::move(*projection)};
}

}  // namespace pmaps
