#include "pmaps_cli/paper_suite.hpp"

#include <array>
#include <exception>
#include <functional>
#include <sstream>

#include "pmaps/algmap.hpp"
#include "pmaps/classify.hpp"
#include "pmaps/hom.hpp"
#include "pmaps/pgroup.hpp"
#include "pmaps/quotient.hpp"
#include "pmaps_cli/loading.hpp"

namespace pmaps::cli {

namespace {

class Checker {
 public:
  explicit Checker(ExampleResult& result) : result_(result) {}

  template <class A, class B>
  void equal(const A& actual, const B& expected, const std::string& what) {
    ++result_.checks;
    if (actual == expected) return;
    std::ostringstream os;
    os << what << ": expected " << expected << ", got " << actual;
    result_.failures.push_back(os.str());
  }

  void holds(bool cond, const std::string& what) {
    ++result_.checks;
    if (!cond) result_.failures.push_back(what);
  }

 private:
  ExampleResult& result_;
};

template <class Map>
void check_counts(Checker& c, const Map& m, std::size_t v, std::size_t e,
                  std::size_t f) {
  MapReport r = report(m);
  c.equal(r.vertices, v, "vertices");
  c.equal(r.edges, e, "edges");
  c.equal(r.faces, f, "faces");
}

bool is_case(const PMapClassification& c, const ExceptionalCase& expected) {
  return c.exceptional_case && *c.exceptional_case == expected;
}

bool quaternion_of_order_8(const FiniteGroup& g, const Subgroup& h) {
  if (h.order() != 8 || is_abelian(g, h)) return false;
  std::size_t involutions = 0;
  for (Elem x : h.elements()) involutions += g.element_order(x) == 2;
  return involutions == 1;
}

void ex5_1(const LoadedFile& in, const FlaggedMap& m, Checker& c) {
  (void)in;
  check_counts(c, m, 3, 6, 4);
  MapReport r = report(m);
  c.holds(!r.orientable, "nonorientable");
  c.holds(r.genus_kind == GenusKind::crosscap_number, "genus is a crosscap number");
  c.equal(r.genus, 1, "crosscap number");
  auto cl = classify(m);
  c.equal(cl.p, 3u, "p");
  c.equal(cl.k, 1u, "k");
  c.holds(cl.solvable, "solvable");
  c.holds(!cl.normal, "nonnormal");
  c.holds(is_case(cl, C32{}), "quotient is C(3,2)");
}

void ex5_2(const LoadedFile& in, const FlaggedMap& m, Checker& c) {
  const FiniteGroup& g = m.group();
  c.equal(g.order(), 72u, "group order");
  check_counts(c, m, 9, 18, 4);
  MapReport r = report(m);
  c.holds(!r.orientable, "nonorientable");
  c.equal(r.genus, 7, "crosscap number");
  Subgroup o3 = o_p(g, 3);
  c.equal(o3.order(), 3u, "|O_3(G)|");
  c.holds(o3 == subgroup_generated(g, {g.pow(symbol_element(in, "d"), 3)}),
          "O_3(G) = <d^3>");
  FlaggedMap q = quotient_map(m, o3);
  c.holds(is_s4(q.group()), "G/O_3(G) is S4");
  c.equal(vef_counts(q).vertices, 3u, "quotient vertices");
  c.holds(identify_c32(q), "quotient is C(3,2)");
  c.holds(is_case(classify(m), C32{}), "classified as C(3,2)");
}

void ex6_1(const LoadedFile& in, const OrientedMap& m, Checker& c) {
  (void)in;
  const FiniteGroup& g = m.group();
  c.equal(g.order(), 384u, "group order");
  c.equal(g.element_order(m.r()), 6u, "|r|");
  c.equal(g.element_order(g.mul(m.r(), m.l())), 4u, "|rl|");
  c.holds(!is_reflexible(m), "chiral");
  check_counts(c, m, 64, 192, 96);
  c.equal(report(m).genus, 17, "genus");
  auto cl = classify(m);
  c.holds(!cl.normal, "nonnormal");
  c.holds(is_case(cl, Dipole{3, 2}), "quotient is D(3,2)");
  c.holds(cl.orientation_status == OrientationStatus::chiral, "orientation chiral");
}

void ex6_2(const LoadedFile& in, const OrientedMap& m, Checker& c) {
  const FiniteGroup& g = m.group();
  c.equal(g.order(), 48u, "group order");
  c.equal(g.element_order(m.r()), 6u, "|r|");
  c.equal(g.element_order(g.mul(m.r(), m.l())), 8u, "|rl|");
  check_counts(c, m, 8, 24, 6);
  c.equal(report(m).euler, -10, "euler characteristic");
  c.holds(is_reflexible(m), "reflexible");
  const Elem z = symbol_element(in, "z");
  std::array<Elem, 2> src{m.r(), m.l()};
  std::array<Elem, 2> dst{m.r(), g.mul(z, m.l())};
  c.holds(automorphism_exists(g, src, dst), "automorphism r -> r, l -> zl");
  c.holds(quaternion_of_order_8(g, o_p(g, 2)), "O_2(G) is quaternion of order 8");
  c.holds(is_case(classify(m), Dipole{3, 2}), "quotient is D(3,2)");
}

void ex6_3(const LoadedFile& in, const FlaggedMap& m, Checker& c) {
  (void)in;
  const FiniteGroup& g = m.group();
  c.equal(even_word_subgroup(m).order(), g.order(), "|<rt, tl>|");
  c.holds(!is_orientable(m), "nonorientable");
  check_counts(c, m, 4, 6, 3);
  c.equal(report(m).euler, 1, "euler characteristic");
  c.equal(o_p(g, 2).order(), 4u, "|O_2(G)|");
  c.holds(is_case(classify(m), DiscSemistar{6}), "quotient is DM(6)");
}

void ex6_4(const LoadedFile& in, const FlaggedMap& m, Checker& c) {
  (void)in;
  const FiniteGroup& g = m.group();
  Subgroup plus = even_word_subgroup(m);
  c.equal(index(g, plus), 2u, "|G : <rt, tl>|");
  bool a4 = plus.order() == 12 && !is_abelian(g, plus);
  for (Elem x : plus.elements()) a4 = a4 && g.element_order(x) != 6;
  c.holds(a4, "<rt, tl> is A4");
  check_counts(c, m, 4, 6, 4);
  MapReport r = report(m);
  c.equal(r.euler, 2, "euler characteristic");
  c.equal(r.genus, 0, "genus");
  auto cl = classify(m);
  c.holds(!cl.normal, "nonnormal regular");
  c.holds(cl.orientation_status == OrientationStatus::orientable_normal,
          "normal orientably-regular");
  c.holds(is_case(cl, SphereSemistar{6}), "quotient is EM(6)");
}

void ex7_1(const LoadedFile& in, const OrientedMap& m, Checker& c) {
  (void)in;
  c.equal(m.group().order(), 2106u, "group order");
  c.equal(vef_counts(m).vertices, 27u, "vertices");
  c.holds(!is_reflexible(m), "chiral");
  c.holds(classify(m).normal, "normal");
  c.holds(vertex_action_primitive(m), "primitive vertex action");
  auto s = verify_sylow_structure(m);
  c.holds(s.case_tag == SylowCase::direct_product_elementary, "P = P0 x T");
  c.equal(s.complement_rank, 3u, "rank of T");
}

void ex7_2(const LoadedFile& in, const FlaggedMap& m, Checker& c) {
  (void)in;
  const FiniteGroup& g = m.group();
  c.equal(g.order(), 216u, "group order");
  c.equal(vef_counts(m).vertices, 9u, "vertices");
  c.holds(classify(m).normal, "normal");
  c.holds(vertex_action_primitive(m), "primitive vertex action");
  c.equal(index(g, even_word_subgroup(m)), 2u, "|G : <rt, tl>|");
  auto s = verify_sylow_structure(m);
  c.holds(s.case_tag == SylowCase::direct_product_elementary, "P = P0 x T");
  c.equal(s.complement_rank, 2u, "rank of T");
}

void ex7_3(const LoadedFile& in, const FlaggedMap& m, Checker& c) {
  const FiniteGroup& g = m.group();
  c.equal(g.order(), 216u, "group order");
  c.equal(vef_counts(m).vertices, 9u, "vertices");
  c.holds(classify(m).normal, "normal");
  c.holds(!is_orientable(m), "nonorientable");
  c.holds(vertex_action_primitive(m), "primitive vertex action");
  auto s = verify_sylow_structure(m);
  c.holds(s.case_tag == SylowCase::central_product_extraspecial, "P = E * P0");
  c.equal(s.extraspecial_order, 27u, "|E|");
  Subgroup bc = subgroup_generated(
      g, {symbol_element(in, "b"), symbol_element(in, "c")});
  c.holds(bc.order() == 27 && is_extraspecial(g, bc, 3), "<b, c> extraspecial of order 27");
  c.holds(center(g, sylow_p(g, 3)) ==
              subgroup_generated(g, {symbol_element(in, "a")}),
          "P0 = <a> is the centre");
}

template <class Map>
using Body = void (*)(const LoadedFile&, const Map&, Checker&);

struct Example {
  std::string name;
  std::function<void(const LoadedFile&, const AnyMap&, Checker&)> run;
};

template <class Map>
Example example(std::string name, Body<Map> body) {
  return {std::move(name), [body](const LoadedFile& in, const AnyMap& m, Checker& c) {
            body(in, std::get<Map>(m), c);
          }};
}

const std::vector<Example>& examples() {
  static const std::vector<Example> list{
      example<FlaggedMap>("ex5_1", ex5_1),  example<FlaggedMap>("ex5_2", ex5_2),
      example<OrientedMap>("ex6_1", ex6_1), example<OrientedMap>("ex6_2", ex6_2),
      example<FlaggedMap>("ex6_3", ex6_3),  example<FlaggedMap>("ex6_4", ex6_4),
      example<OrientedMap>("ex7_1", ex7_1), example<FlaggedMap>("ex7_2", ex7_2),
      example<FlaggedMap>("ex7_3", ex7_3),
  };
  return list;
}

}  // namespace

const std::vector<std::string>& corpus_examples() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& e : examples()) n.push_back(e.name);
    return n;
  }();
  return names;
}

std::vector<ExampleResult> run_paper_suite(const std::filesystem::path& corpus_dir,
                                           const RealizeOptions& options) {
  std::vector<ExampleResult> results;
  for (const auto& ex : examples()) {
    ExampleResult res;
    res.name = ex.name;
    Checker checker(res);
    try {
      LoadedFile in = load_group_file(corpus_dir / (ex.name + ".grp"), options);
      AnyMap m = map_from_decl(in, select_map(in.file, ex.name));
      ex.run(in, m, checker);
    } catch (const std::bad_variant_access&) {
      res.failures.push_back("map has the wrong kind");
    } catch (const std::exception& e) {
      res.failures.push_back(std::string("error: ") + e.what());
    }
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace pmaps::cli
