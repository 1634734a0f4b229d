#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "pmaps/errors.hpp"
#include "pmaps/group_input.hpp"
#include "pmaps/presentation.hpp"

using namespace pmaps;

namespace {

ParseError parse_error(const std::string& text) {
  try {
    parse_group_file(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return ParseError("none", 0, 0);
}

}  // namespace

TEST(Word, FreeReduction) {
  Word a = Word::generator(0);
  Word b = Word::generator(1);
  EXPECT_TRUE((a * a.inverse()).empty());
  EXPECT_EQ((a * b * b.inverse()).letters(), a.letters());
  EXPECT_EQ(a.power(3).letters(), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(a.power(-2).letters(), (std::vector<int>{-1, -1}));
  EXPECT_EQ(commutator(a, b).letters(), (std::vector<int>{-1, -2, 1, 2}));
  EXPECT_EQ(a.conjugated_by(b).letters(), (std::vector<int>{-2, 1, 2}));
}

TEST(Parser, PresentationRelators) {
  auto f = parse_group_file("group g\ngens a,b\nrel a^3\nrel (a*b)^2\nrel a^b = a^-1\n");
  EXPECT_EQ(f.name, "g");
  EXPECT_EQ(f.mode, InputMode::presentation);
  EXPECT_EQ(f.symbols, (std::vector<std::string>{"a", "b"}));
  ASSERT_EQ(f.presentation.relators.size(), 3u);
  EXPECT_EQ(f.presentation.relators[0].letters(), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(f.presentation.relators[1].letters(), (std::vector<int>{1, 2, 1, 2}));
  // a^b = a^-1 becomes b^-1 a b a
  EXPECT_EQ(f.presentation.relators[2].letters(), (std::vector<int>{-2, 1, 2, 1}));
}

TEST(Parser, CommentsAndMaps) {
  auto f = parse_group_file(
      "# leading comment\n"
      "group s\n"
      "perm r = (1 3)\n"
      "perm t = (1 2)(3 4)  # trailing\n"
      "perm l = (1 2)\n"
      "map m : flagged t=t r=r l=l\n"
      "map n : oriented r=r*t l=l\n");
  EXPECT_EQ(f.mode, InputMode::permutation);
  ASSERT_EQ(f.perms.size(), 3u);
  ASSERT_EQ(f.maps.size(), 2u);
  EXPECT_EQ(f.maps[0].kind, MapKind::flagged);
  EXPECT_TRUE(f.maps[0].t.has_value());
  EXPECT_EQ(f.maps[1].kind, MapKind::oriented);
  EXPECT_EQ(f.find_map("n"), &f.maps[1]);
  EXPECT_EQ(f.find_map("zz"), nullptr);
}

TEST(Parser, MatrixMode) {
  auto f = parse_group_file("mat x = [[1,1],[0,1]] mod 5\nmat y = [[0,-1],[1,0]] mod 5\n");
  EXPECT_EQ(f.mode, InputMode::matrix);
  ASSERT_EQ(f.mats.size(), 2u);
  EXPECT_EQ(f.mats[1].entries, (std::array<long long, 4>{0, -1, 1, 0}));
  EXPECT_EQ(f.mats[1].prime, 5u);
}

TEST(Parser, ErrorsCarryLineAndColumn) {
  auto e = parse_error("gens a,b\nrel a^2\nrel c^2\n");
  EXPECT_EQ(e.line(), 3u);
  EXPECT_EQ(e.column(), 5u);
  EXPECT_NE(e.message().find("unknown identifier"), std::string::npos);

  e = parse_error("gens a\nrel a^\n");
  EXPECT_EQ(e.line(), 2u);

  e = parse_error("gens a\nrel a^2 $\n");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 9u);

  e = parse_error("gens a,a\n");
  EXPECT_NE(e.message().find("duplicate"), std::string::npos);

  e = parse_error("perm x = (1 2)\ngens a\n");
  EXPECT_EQ(e.line(), 2u);

  e = parse_error("# nothing\n");
  EXPECT_NE(e.message().find("no generators"), std::string::npos);

  e = parse_error("perm r = (1 2)\nmap m : flagged r=r l=r\n");
  EXPECT_EQ(e.line(), 2u);
}

TEST(Parser, ExponentOverflow) {
  auto e = parse_error("gens a\nrel a^10000001\n");
  EXPECT_NE(e.message().find("exponent overflow"), std::string::npos);
  e = parse_error("gens a,b\nrel ((a*b)^1000)^100000\n");
  EXPECT_NE(e.message().find("exponent overflow"), std::string::npos);
  EXPECT_NO_THROW(parse_group_file("gens a\nrel a^1000000\n"));
}

TEST(Parser, CorpusRoundTrip) {
  for (const char* name : {"ex5_1", "ex5_2", "ex6_1", "ex6_2", "ex6_3", "ex6_4", "ex7_1",
                           "ex7_2", "ex7_3", "s4"}) {
    auto f = parse_group_file(fixtures::read_file(fixtures::corpus_path(name)));
    auto text = print_group_file(f);
    EXPECT_EQ(parse_group_file(text), f) << name;
    EXPECT_EQ(print_group_file(parse_group_file(text)), text) << name;
  }
}

TEST(Parser, RandomWordsRoundTrip) {
  std::mt19937 rng(99);
  std::vector<std::string> names{"a", "b", "c"};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> letters;
    const int len = 1 + static_cast<int>(rng() % 12);
    for (int i = 0; i < len; ++i) {
      int g = 1 + static_cast<int>(rng() % 3);
      letters.push_back(rng() % 2 ? g : -g);
    }
    Word w(letters);
    if (w.empty()) continue;
    GroupFile f;
    f.symbols = names;
    f.presentation.generator_names = names;
    f.presentation.relators = {w};
    auto g = parse_group_file(print_group_file(f));
    ASSERT_EQ(g.presentation.relators.size(), 1u);
    EXPECT_EQ(g.presentation.relators[0], w) << print_word(w, names);
  }
}

TEST(Realize, ModesAndEvaluation) {
  auto f = parse_group_file("perm x = (1 2 3)\nperm y = (1 2)\n");
  auto rg = realize(f);
  EXPECT_EQ(rg.group->order(), 6u);
  EXPECT_EQ(rg.group->degree(), 3u);
  EXPECT_EQ(rg.coset_count, 0u);
  Word xy = Word::generator(0) * Word::generator(1);
  Elem e = evaluate(*rg.group, rg.symbols, xy);
  EXPECT_EQ(e, rg.group->mul(rg.symbols[0], rg.symbols[1]));

  auto p = realize(parse_group_file("gens a,b\nrel a^3\nrel b^2\nrel (a*b)^2\n"));
  EXPECT_EQ(p.group->order(), 6u);
  EXPECT_EQ(p.coset_count, 6u);

  auto m = realize(parse_group_file("mat x = [[1,1],[0,1]] mod 3\nmat y = [[0,1],[1,0]] mod 3\n"));
  EXPECT_EQ(m.group->order(), 48u);
}

TEST(Realize, Limits) {
  auto f = parse_group_file("perm x = (1 2 3 4 5)\nperm y = (1 2)\n");
  EXPECT_THROW(realize(f, {.max_order = 50}), ResourceError);
  auto g = parse_group_file("gens a,b\nrel a^4\nrel b^2\nrel (a*b)^3\n");
  EXPECT_THROW(realize(g, {.max_cosets = 10}), ResourceError);
  auto bad = parse_group_file("mat x = [[1,1],[1,1]] mod 3\n");
  EXPECT_THROW(realize(bad), ContractViolation);
  auto nonprime = parse_group_file("mat x = [[1,1],[0,1]] mod 4\n");
  EXPECT_THROW(realize(nonprime), ContractViolation);
}
