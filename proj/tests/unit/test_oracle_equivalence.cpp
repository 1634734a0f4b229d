#include <gtest/gtest.h>

#include <set>

#include "checks.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

TEST(OracleEquivalence, SeedGroupsUpTo100) {
  auto failures = checks::oracle_equivalence(100);
  for (const auto& f : failures) ADD_FAILURE() << f;
}

TEST(OracleEquivalence, SeedListCoversTheFamilies) {
  auto seeds = fixtures::seed_groups(100);
  std::set<std::string> names;
  for (const auto& s : seeds) names.insert(s.name);
  for (const char* n : {"C12", "D8", "S4", "A4", "Q8", "E2^3", "A5", "C3xQ8"}) {
    EXPECT_TRUE(names.count(n)) << n;
  }
  for (const auto& s : seeds) {
    EXPECT_LE(pmaps::FiniteGroup::closure(s.degree, s.gens).order(), 100u) << s.name;
  }
}

TEST(OracleSelfCheck, KnownValues) {
  auto s4 = oracle::generate({oracle::cycles(4, {{1, 2, 3, 4}}), oracle::cycles(4, {{1, 2}})});
  EXPECT_EQ(s4.size(), 24);
  EXPECT_EQ(oracle::all_sylows(s4, 2).size(), 3u);
  EXPECT_EQ(oracle::all_sylows(s4, 3).size(), 4u);
  EXPECT_EQ(oracle::o_p(s4, 2).size(), 4u);
  EXPECT_TRUE(oracle::solvable(s4));
  EXPECT_EQ(oracle::automorphisms(s4).size(), 24u);
  auto a5 = oracle::generate({oracle::cycles(5, {{1, 2, 3, 4, 5}}), oracle::cycles(5, {{1, 2, 3}})});
  EXPECT_FALSE(oracle::solvable(a5));
  EXPECT_EQ(oracle::all_sylows(a5, 5).size(), 6u);
}
