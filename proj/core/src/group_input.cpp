#include "pmaps/group_input.hpp"

#include <algorithm>

#include "pmaps/errors.hpp"
#include "pmaps/matrix_group.hpp"

namespace pmaps {

RealizedGroup realize(const GroupFile& file, const RealizeOptions& options) {
  RealizedGroup out;
  std::vector<Permutation> gens;
  std::size_t degree = 0;
  switch (file.mode) {
    case InputMode::presentation: {
      auto table = todd_coxeter(file.presentation, {}, options.max_cosets);
      out.coset_count = table.num_cosets();
      degree = table.num_cosets();
      gens = table.permutations();
      break;
    }
    case InputMode::permutation: {
      for (const auto& d : file.perms) {
        for (const auto& c : d.cycles) {
          for (Point x : c) degree = std::max<std::size_t>(degree, x);
        }
      }
      degree = std::max<std::size_t>(degree, 1);
      for (const auto& d : file.perms) {
        gens.push_back(Permutation::from_cycles(degree, d.cycles));
      }
      break;
    }
    case InputMode::matrix: {
      std::vector<Mat2> mats;
      for (const auto& d : file.mats) mats.push_back(d.entries);
      const std::uint64_t p = file.mats.empty() ? 2 : file.mats.front().prime;
      auto g = matrix_group(p, mats, options.max_order);
      degree = g.degree();
      gens = g.generators();
      break;
    }
  }
  auto group = std::make_shared<FiniteGroup>(
      FiniteGroup::closure(degree, std::move(gens), options.max_order));
  auto elems = group->generator_elements();
  out.symbols.assign(elems.begin(), elems.end());
  out.group = std::move(group);
  return out;
}

Elem evaluate(const FiniteGroup& g, std::span<const Elem> symbols, const Word& w) {
  Elem acc = g.identity();
  for (int x : w.letters()) {
    auto i = static_cast<std::size_t>(x > 0 ? x : -x) - 1;
    if (i >= symbols.size()) throw ContractViolation("word uses an unknown symbol");
    acc = g.mul(acc, x > 0 ? symbols[i] : g.inv(symbols[i]));
  }
  return acc;
}

}  // namespace pmaps
