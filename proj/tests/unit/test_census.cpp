#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "pmaps/census.hpp"
#include "pmaps/classify.hpp"
#include "pmaps/errors.hpp"
#include "pmaps/hom.hpp"
#include "pmaps/matrix_group.hpp"

using namespace pmaps;

namespace {

std::shared_ptr<const FiniteGroup> s4() {
  return fixtures::group_of(4, {"(1 2 3 4)", "(1 2)"});
}

std::shared_ptr<const FiniteGroup> cyclic(std::size_t n) {
  std::string c = "(";
  for (std::size_t i = 1; i <= n; ++i) c += (i > 1 ? " " : "") + std::to_string(i);
  return fixtures::group_of(n, {c + ")"});
}

// Valid tuples counted and split into Aut-orbits by the oracle.
struct OracleCensus {
  std::size_t tuples = 0;
  std::size_t classes = 0;
  std::size_t aut_order = 0;
};

OracleCensus oracle_census(const FiniteGroup& g, bool flagged) {
  auto m = fixtures::mirror(g);
  const auto& og = m.group;
  auto autos = oracle::automorphisms(og);
  auto invol = [&](int x) { return x != 0 && og.mul(x, x) == 0; };
  std::vector<std::vector<int>> tuples;
  if (flagged) {
    for (int t = 1; t < og.size(); ++t) {
      for (int r = 1; r < og.size(); ++r) {
        for (int l = 1; l < og.size(); ++l) {
          if (!invol(t) || !invol(r) || !invol(l)) continue;
          if (og.mul(t, l) != og.mul(l, t)) continue;
          if (oracle::generated_order(og, {t, r, l}) != og.size()) continue;
          tuples.push_back({t, r, l});
        }
      }
    }
  } else {
    for (int r = 1; r < og.size(); ++r) {
      for (int l = 1; l < og.size(); ++l) {
        if (!invol(l)) continue;
        if (oracle::generated_order(og, {r, l}) != og.size()) continue;
        tuples.push_back({r, l});
      }
    }
  }
  std::set<std::vector<int>> done;
  OracleCensus out;
  out.tuples = tuples.size();
  out.aut_order = autos.size();
  for (const auto& tup : tuples) {
    if (done.count(tup)) continue;
    ++out.classes;
    for (const auto& a : autos) {
      std::vector<int> img;
      for (int x : tup) img.push_back(a[x]);
      done.insert(img);
    }
  }
  return out;
}

std::size_t total_class_size(const std::vector<CensusEntry>& entries) {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.class_size;
  return n;
}

}  // namespace

TEST(Census, CyclicOfOrderTwo) {
  auto z2 = fixtures::group_of(2, {"(1 2)"});
  auto oriented = enumerate_oriented(z2);
  ASSERT_EQ(oriented.size(), 1u);
  EXPECT_EQ(oriented[0].class_size, 1u);
  // t = r = l is the only involution triple; it is kept with its tag.
  auto flagged = enumerate_flagged(z2);
  ASSERT_EQ(flagged.size(), 1u);
  EXPECT_TRUE(flagged[0].degenerate());
}

TEST(Census, OddCyclicHasNoFlaggedMaps) {
  for (std::size_t n : {3, 5, 7, 9, 15}) {
    auto cn = cyclic(n);
    EXPECT_TRUE(enumerate_flagged(cn).empty()) << n;
    EXPECT_TRUE(enumerate_oriented(cn).empty()) << n;
  }
}

TEST(Census, S4MatchesOracleOrbits) {
  auto g = s4();
  for (bool flagged : {false, true}) {
    auto entries = flagged ? enumerate_flagged(g) : enumerate_oriented(g);
    auto expect = oracle_census(*g, flagged);
    EXPECT_EQ(entries.size(), expect.classes) << flagged;
    EXPECT_EQ(total_class_size(entries), expect.tuples) << flagged;
    for (const auto& e : entries) EXPECT_EQ(e.class_size, expect.aut_order);
  }
  EXPECT_EQ(enumerate_oriented(g).size(), 2u);
  EXPECT_EQ(enumerate_flagged(g).size(), 3u);
}

TEST(Census, SmallGroupsMatchOracle) {
  std::vector<std::vector<std::string>> groups{
      {"(1 2)", "(3 4)"},                        // Z2 x Z2
      {"(1 2 3 4)", "(1 3)"},                    // D8
      {"(1 2 3)", "(1 2)"},                      // S3
      {"(1 2 3 4 5 6)", "(2 6)(3 5)"},           // D12
      {"(1 2)", "(3 4)", "(5 6)"},               // Z2^3
      {"(1 2 3)", "(1 2)(3 4)"},                 // A4
      {"(1 2 3 4 5)", "(2 5)(3 4)"},             // D10
  };
  for (const auto& gens : groups) {
    std::size_t degree = 0;
    for (const auto& s : gens) {
      for (char ch : s) {
        if (ch >= '1' && ch <= '9') degree = std::max<std::size_t>(degree, ch - '0');
      }
    }
    auto g = fixtures::group_of(degree, gens);
    for (bool flagged : {false, true}) {
      auto entries = flagged ? enumerate_flagged(g) : enumerate_oriented(g);
      auto expect = oracle_census(*g, flagged);
      EXPECT_EQ(entries.size(), expect.classes) << gens[0] << " flagged=" << flagged;
      EXPECT_EQ(total_class_size(entries), expect.tuples) << gens[0];
    }
  }
}

TEST(Census, EntriesArePairwiseNonIsomorphic) {
  auto g = s4();
  auto entries = enumerate_oriented(g);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      EXPECT_FALSE(maps_isomorphic(std::get<OrientedMap>(entries[i].map),
                                   std::get<OrientedMap>(entries[j].map)));
    }
  }
}

TEST(Census, ClosedUnderMirror) {
  std::vector<Mat2> mats{{-1, 1, 0, -1}, {0, 1, 1, 0}};
  auto gl = std::make_shared<const FiniteGroup>(matrix_group(3, mats));
  ASSERT_EQ(gl->order(), 48u);
  auto entries = enumerate_oriented(gl);
  EXPECT_EQ(entries.size(), 4u);
  for (const auto& e : entries) {
    const auto& m = std::get<OrientedMap>(e.map);
    std::size_t hits = 0;
    for (const auto& f : entries) {
      if (maps_isomorphic(m.mirror(), std::get<OrientedMap>(f.map))) ++hits;
    }
    EXPECT_EQ(hits, 1u);
  }
  EXPECT_TRUE(enumerate_flagged(gl).empty());
  auto ex62 = fixtures::load("ex6_2").oriented();
  std::size_t hits = 0;
  for (const auto& e : entries) {
    if (maps_isomorphic(std::get<OrientedMap>(e.map), ex62)) ++hits;
  }
  EXPECT_EQ(hits, 1u);
}

TEST(Census, ContainsCorpusMaps) {
  auto g = s4();
  auto flagged = enumerate_flagged(g);
  for (const char* name : {"ex5_1", "ex6_3", "ex6_4"}) {
    auto c = fixtures::load(name);
    std::size_t hits = 0;
    for (const auto& e : flagged) {
      if (maps_isomorphic(std::get<FlaggedMap>(e.map), c.flagged())) ++hits;
    }
    EXPECT_EQ(hits, 1u) << name;
  }
}

TEST(Census, DeterministicAcrossThreadCounts) {
  auto g = s4();
  auto one = enumerate_flagged(g, {.threads = 1});
  auto four = enumerate_flagged(g, {.threads = 4});
  ASSERT_EQ(one.size(), four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].tuple(), four[i].tuple());
    EXPECT_EQ(one[i].class_size, four[i].class_size);
    EXPECT_EQ(one[i].report, four[i].report);
  }
}

TEST(Census, ResourceBound) {
  auto g = s4();
  EXPECT_THROW(enumerate_oriented(g, {.max_order = 20}), ResourceError);
}

TEST(Census, ClassifiedEntriesSatisfyTheorem) {
  auto g = s4();
  auto entries = enumerate_flagged(g);
  census_classify(entries);
  std::set<std::string> labels;
  for (const auto& e : entries) {
    ASSERT_TRUE(e.classification.has_value());
    EXPECT_TRUE(e.classification->solvable);
    if (!e.classification->normal) {
      ASSERT_TRUE(e.classification->exceptional_case.has_value());
      labels.insert(label(*e.classification->exceptional_case));
    }
  }
  EXPECT_EQ(labels, (std::set<std::string>{"C(3,2)", "DM(6)", "EM(6)"}));
}
