#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pmaps/presentation.hpp"

#ifndef PMAPS_CORPUS_DIR
#error "PMAPS_CORPUS_DIR must point at the corpus directory"
#endif

namespace fixtures {

using pmaps::Elem;
using pmaps::FiniteGroup;
using pmaps::Permutation;
using pmaps::Point;

namespace {

std::vector<std::vector<Point>> parse_cycles(const std::string& text) {
  std::vector<std::vector<Point>> out;
  std::vector<Point> cur;
  std::string num;
  auto flush = [&] {
    if (!num.empty()) {
      cur.push_back(static_cast<Point>(std::stoul(num)));
      num.clear();
    }
  };
  for (char ch : text) {
    if (ch == '(') {
      cur.clear();
    } else if (ch == ')') {
      flush();
      if (!cur.empty()) out.push_back(cur);
    } else if (ch == ' ' || ch == ',') {
      flush();
    } else {
      num.push_back(ch);
    }
  }
  return out;
}

Permutation perm(std::size_t degree, const std::string& cycles) {
  return Permutation::from_cycles(degree, parse_cycles(cycles));
}

SeedGroup seed(std::string name, std::size_t degree,
               const std::vector<std::string>& gens) {
  SeedGroup s{std::move(name), degree, {}};
  for (const auto& g : gens) s.gens.push_back(perm(degree, g));
  return s;
}

std::string cycle_text(std::size_t from, std::size_t len) {
  std::string s = "(";
  for (std::size_t i = 0; i < len; ++i) {
    s += (i ? " " : "") + std::to_string(from + i);
  }
  return s + ")";
}

SeedGroup cyclic_seed(std::size_t n) {
  return seed("C" + std::to_string(n), std::max<std::size_t>(n, 1),
              {n > 1 ? cycle_text(1, n) : "()"});
}

SeedGroup dihedral_seed(std::size_t n) {
  std::string reflection;
  for (std::size_t i = 2; i <= n + 1 - i; ++i) {
    if (i != n + 2 - i) {
      reflection += "(" + std::to_string(i) + " " + std::to_string(n + 2 - i) + ")";
    }
  }
  if (reflection.empty()) reflection = "()";
  return seed("D" + std::to_string(2 * n), n, {cycle_text(1, n), reflection});
}

SeedGroup elementary_seed(std::size_t p, std::size_t k) {
  std::vector<std::string> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(cycle_text(1 + i * p, p));
  return seed("E" + std::to_string(p) + "^" + std::to_string(k), p * k, gens);
}

SeedGroup product(const SeedGroup& a, const SeedGroup& b) {
  SeedGroup s{a.name + "x" + b.name, a.degree + b.degree, {}};
  for (const auto& g : a.gens) s.gens.push_back(g.extended(s.degree));
  for (const auto& g : b.gens) {
    std::vector<Point> im(s.degree);
    for (Point i = 0; i < a.degree; ++i) im[i] = i;
    for (Point i = 0; i < b.degree; ++i) {
      im[a.degree + i] = static_cast<Point>(a.degree + g[i]);
    }
    s.gens.emplace_back(std::move(im));
  }
  return s;
}

std::size_t order_of(const SeedGroup& s) {
  return FiniteGroup::closure(s.degree, s.gens).order();
}

}  // namespace

std::string corpus_path(const std::string& name) {
  return std::string(PMAPS_CORPUS_DIR) + "/" + name + ".grp";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Elem CorpusMap::symbol(const std::string& name) const {
  for (std::size_t i = 0; i < file.symbols.size(); ++i) {
    if (file.symbols[i] == name) return realized.symbols[i];
  }
  throw std::runtime_error("no symbol " + name);
}

CorpusMap load(const std::string& name) {
  auto file = pmaps::parse_group_file(read_file(corpus_path(name)));
  auto realized = pmaps::realize(file);
  const pmaps::MapDecl* d = file.find_map(name);
  if (!d) throw std::runtime_error("corpus file without map " + name);
  auto ev = [&](const pmaps::Word& w) {
    return pmaps::evaluate(*realized.group, realized.symbols, w);
  };
  pmaps::AnyMap map = d->kind == pmaps::MapKind::oriented
                          ? pmaps::AnyMap(pmaps::OrientedMap(realized.group, ev(d->r), ev(d->l)))
                          : pmaps::AnyMap(pmaps::FlaggedMap(realized.group, ev(*d->t),
                                                            ev(d->r), ev(d->l)));
  return CorpusMap{std::move(file), std::move(realized), std::move(map)};
}

std::shared_ptr<const FiniteGroup> group_of(std::size_t degree,
                                            const std::vector<std::string>& gens) {
  std::vector<Permutation> perms;
  for (const auto& g : gens) perms.push_back(perm(degree, g));
  return std::make_shared<const FiniteGroup>(FiniteGroup::closure(degree, perms));
}

Elem elem(const FiniteGroup& g, const std::string& cycles) {
  auto x = g.find(perm(g.degree(), cycles));
  if (!x) throw std::runtime_error("not in group: " + cycles);
  return *x;
}

std::vector<SeedGroup> seed_groups(std::size_t max_order) {
  std::vector<SeedGroup> out;
  auto add = [&](SeedGroup s) {
    if (order_of(s) <= max_order) out.push_back(std::move(s));
  };
  for (std::size_t n = 1; n <= 16; ++n) add(cyclic_seed(n));
  for (std::size_t n : {25, 27, 32}) add(cyclic_seed(n));
  for (std::size_t n = 3; n <= 12; ++n) add(dihedral_seed(n));
  for (std::size_t n : {16, 25}) add(dihedral_seed(n));
  SeedGroup s4 = seed("S4", 4, {"(1 2 3 4)", "(1 2)"});
  SeedGroup a4 = seed("A4", 4, {"(1 2 3)", "(1 2)(3 4)"});
  SeedGroup q8 = seed("Q8", 8, {"(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"});
  SeedGroup a5 = seed("A5", 5, {"(1 2 3 4 5)", "(1 2 3)"});
  add(s4);
  add(a4);
  add(q8);
  add(a5);
  for (auto [p, k] : std::vector<std::pair<std::size_t, std::size_t>>{
           {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
    add(elementary_seed(p, k));
  }
  const std::vector<SeedGroup> small{cyclic_seed(2), cyclic_seed(3), cyclic_seed(4),
                                     dihedral_seed(3), dihedral_seed(4), q8, a4,
                                     elementary_seed(2, 2), cyclic_seed(5), s4};
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = i; j < small.size(); ++j) {
      add(product(small[i], small[j]));
    }
  }
  return out;
}

Mirror mirror(const FiniteGroup& g) {
  Mirror m;
  std::vector<oracle::Perm> gens;
  for (const auto& p : g.generators()) {
    gens.emplace_back(p.images().begin(), p.images().end());
  }
  m.group = oracle::generate(gens);
  m.to_oracle.resize(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    auto im = g.images(x);
    m.to_oracle[x] = m.group.find(oracle::Perm(im.begin(), im.end()));
  }
  return m;
}

oracle::ElemSet to_oracle_set(const Mirror& m, const pmaps::Subgroup& h) {
  oracle::ElemSet s;
  for (Elem x : h.elements()) s.insert(m.to_oracle[x]);
  return s;
}

}  // namespace fixtures
