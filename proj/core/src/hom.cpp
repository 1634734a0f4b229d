#include "pmaps/hom.hpp"

#include <limits>

#include "pmaps/errors.hpp"

namespace pmaps {

namespace {
constexpr Elem kUnset = std::numeric_limits<Elem>::max();
}

bool GroupHom::is_injective(std::size_t target_order) const {
  std::vector<std::uint8_t> hit(target_order, 0);
  for (Elem y : images) {
    if (hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

bool GroupHom::is_surjective(std::size_t target_order) const {
  std::vector<std::uint8_t> hit(target_order, 0);
  std::size_t count = 0;
  for (Elem y : images) {
    if (!hit[y]) {
      hit[y] = 1;
      ++count;
    }
  }
  return count == target_order;
}

std::vector<Elem> GroupHom::kernel() const {
  std::vector<Elem> result;
  for (std::size_t x = 0; x < images.size(); ++x) {
    if (images[x] == FiniteGroup::identity()) result.push_back(static_cast<Elem>(x));
  }
  return result;
}

std::optional<GroupHom> extend_tuple(const FiniteGroup& source,
                                     std::span<const Elem> src_tuple,
                                     const FiniteGroup& target,
                                     std::span<const Elem> dst_tuple) {
  if (src_tuple.size() != dst_tuple.size()) {
    throw ContractViolation("tuple lengths differ");
  }
  GroupHom hom;
  hom.gen_images.assign(dst_tuple.begin(), dst_tuple.end());
  hom.images.assign(source.order(), kUnset);
  hom.images[source.identity()] = target.identity();
  // Every Cayley-graph edge x -> x*s is checked, so a consistent labelling
  // satisfies f(x s) = f(x) f(s) for all x and hence is a homomorphism.
  std::vector<Elem> queue{source.identity()};
  queue.reserve(source.order());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Elem x = queue[i];
    Elem fx = hom.images[x];
    for (std::size_t k = 0; k < src_tuple.size(); ++k) {
      Elem y = source.mul(x, src_tuple[k]);
      Elem fy = target.mul(fx, dst_tuple[k]);
      if (hom.images[y] == kUnset) {
        hom.images[y] = fy;
        queue.push_back(y);
      } else if (hom.images[y] != fy) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != source.order()) {
    throw ContractViolation("source tuple does not generate the source group");
  }
  return hom;
}

std::optional<GroupHom> hom_extend(const FiniteGroup& source,
                                   const FiniteGroup& target,
                                   std::span<const Elem> gen_images) {
  if (gen_images.size() != source.generators().size()) {
    throw ContractViolation("need one image per source generator");
  }
  return extend_tuple(source, source.generator_elements(), target, gen_images);
}

bool isomorphism_exists(const FiniteGroup& source,
                        std::span<const Elem> src_tuple,
                        const FiniteGroup& target,
                        std::span<const Elem> dst_tuple) {
  if (src_tuple.size() != dst_tuple.size()) {
    throw ContractViolation("tuple lengths differ");
  }
  if (subgroup_generated(target, dst_tuple).order() != target.order()) {
    throw ContractViolation("target tuple does not generate the target group");
  }
  if (source.order() != target.order()) {
    if (subgroup_generated(source, src_tuple).order() != source.order()) {
      throw ContractViolation("source tuple does not generate the source group");
    }
    return false;
  }
  for (std::size_t k = 0; k < src_tuple.size(); ++k) {
    if (source.element_order(src_tuple[k]) != target.element_order(dst_tuple[k])) {
      if (subgroup_generated(source, src_tuple).order() != source.order()) {
        throw ContractViolation("source tuple does not generate the source group");
      }
      return false;
    }
  }
  auto hom = extend_tuple(source, src_tuple, target, dst_tuple);
  // equal orders and a generating target tuple make any hom surjective,
  // hence bijective
  return hom.has_value();
}

std::vector<std::uint32_t> conjugacy_class_sizes(const FiniteGroup& g) {
  std::vector<std::uint32_t> sizes(g.order(), 0);
  for (std::size_t start = 0; start < g.order(); ++start) {
    if (sizes[start]) continue;
    std::vector<Elem> cls{static_cast<Elem>(start)};
    std::vector<std::uint8_t> seen(g.order(), 0);
    seen[start] = 1;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (Elem s : g.generator_elements()) {
        Elem y = g.conj(cls[i], s);
        if (!seen[y]) {
          seen[y] = 1;
          cls.push_back(y);
        }
      }
    }
    for (Elem x : cls) sizes[x] = static_cast<std::uint32_t>(cls.size());
  }
  return sizes;
}

}  // namespace pmaps
