#include <gtest/gtest.h>

#include "checks.hpp"
#include "oracle.hpp"

class CorpusOracle : public ::testing::TestWithParam<const char*> {};

TEST_P(CorpusOracle, MatchesLibrary) {
  for (const auto& f : checks::corpus_against_oracle(GetParam())) ADD_FAILURE() << f;
}

INSTANTIATE_TEST_SUITE_P(Corpus, CorpusOracle,
                         ::testing::Values("s4", "ex5_1", "ex5_2", "ex6_1", "ex6_2", "ex6_3",
                                           "ex6_4", "ex7_1", "ex7_2", "ex7_3"));

TEST(CorpusOracleGroups, Orders) {
  EXPECT_EQ(oracle::corpus_group("s4").n, 24);
  EXPECT_EQ(oracle::corpus_group("ex5_2").n, 72);
  EXPECT_EQ(oracle::corpus_group("ex6_1").n, 384);
  EXPECT_EQ(oracle::corpus_group("ex6_2").n, 48);
  EXPECT_EQ(oracle::corpus_group("ex7_1").n, 2106);
  EXPECT_EQ(oracle::corpus_group("ex7_2").n, 216);
  EXPECT_EQ(oracle::corpus_group("ex7_3").n, 216);
}
