#include <gtest/gtest.h>

#include "pmaps/errors.hpp"
#include "pmaps/presentation.hpp"
#include "pmaps/todd_coxeter.hpp"

using namespace pmaps;

namespace {

Presentation pres(const std::string& text) {
  return parse_group_file(text).presentation;
}

}  // namespace

TEST(ToddCoxeter, TrivialSubgroupGivesGroupOrder) {
  auto table = todd_coxeter(pres("gens a,b\nrel a^4\nrel b^2\nrel (a*b)^3\n"), {});
  EXPECT_TRUE(table.is_closed());
  EXPECT_EQ(table.num_cosets(), 24u);
  auto g = perms_from_table(table);
  EXPECT_EQ(g.order(), 24u);
}

TEST(ToddCoxeter, SubgroupIndex) {
  auto p = pres("gens a,b\nrel a^4\nrel b^2\nrel (a*b)^3\n");
  std::vector<Word> h{Word::generator(0)};
  auto table = todd_coxeter(p, h);
  EXPECT_EQ(table.num_cosets(), 6u);
  // the subgroup fixes coset 0
  EXPECT_EQ(table(0, 0), 0);
  EXPECT_EQ(table(0, 1), 0);
  auto perms = table.permutations();
  ASSERT_EQ(perms.size(), 2u);
  EXPECT_EQ(perms[0].degree(), 6u);
  EXPECT_EQ(perms[0][0], 0u);
}

TEST(ToddCoxeter, CollapsingPresentations) {
  // a^5 = 1 and a^7 = 1 force a = 1
  auto t = todd_coxeter(pres("gens a\nrel a^5\nrel a^7\n"), {});
  EXPECT_EQ(t.num_cosets(), 1u);
  auto q = todd_coxeter(pres("gens a,b\nrel a^2\nrel b^2\nrel (a*b)^2\nrel a*b^-1\n"), {});
  EXPECT_EQ(q.num_cosets(), 2u);
}

TEST(ToddCoxeter, Dihedral) {
  for (int n = 3; n <= 12; ++n) {
    auto t = todd_coxeter(pres("gens a,b\nrel a^" + std::to_string(n) + "\nrel b^2\nrel (a*b)^2\n"), {});
    EXPECT_EQ(t.num_cosets(), static_cast<std::size_t>(2 * n));
  }
}

TEST(ToddCoxeter, InfiniteGroupHitsLimit) {
  EXPECT_THROW(todd_coxeter(pres("gens a,b\nrel a^2\n"), {}, 500), ResourceError);
  EXPECT_THROW(todd_coxeter(pres("gens a,b\nrel a^4\nrel b^2\nrel (a*b)^3\n"), {}, 10),
               ResourceError);
}
