#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "pmaps/errors.hpp"
#include "pmaps/numtheory.hpp"
#include "pmaps/pgroup.hpp"

using namespace pmaps;

TEST(NumberTheory, Basics) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(2003));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_EQ(prime_divisors(2106), (std::vector<std::uint64_t>{2, 3, 13}));
  EXPECT_EQ(p_part(384, 2), 128u);
  EXPECT_EQ(as_prime_power(81), (std::pair<std::uint64_t, unsigned>{3, 4}));
  EXPECT_FALSE(as_prime_power(12).has_value());
  EXPECT_FALSE(as_prime_power(1).has_value());
  EXPECT_TRUE(is_power_of(64, 2));
  EXPECT_FALSE(is_power_of(48, 2));
}

TEST(PGroup, SylowOrders) {
  auto s4 = fixtures::group_of(4, {"(1 2 3 4)", "(1 2)"});
  EXPECT_EQ(sylow_p(*s4, 2).order(), 8u);
  EXPECT_EQ(sylow_p(*s4, 3).order(), 3u);
  EXPECT_EQ(sylow_p(*s4, 5).order(), 1u);
  EXPECT_EQ(o_p(*s4, 2).order(), 4u);
  EXPECT_EQ(o_p(*s4, 3).order(), 1u);
  EXPECT_FALSE(has_normal_sylow(*s4, Subgroup::whole(*s4), 2));
  auto a5 = fixtures::group_of(5, {"(1 2 3 4 5)", "(1 2 3)"});
  EXPECT_EQ(sylow_p(*a5, 2).order(), 4u);
  EXPECT_EQ(sylow_p(*a5, 5).order(), 5u);
  EXPECT_EQ(o_p(*a5, 2).order(), 1u);
}

TEST(PGroup, CenterAndNilpotency) {
  auto d8 = fixtures::group_of(4, {"(1 2 3 4)", "(1 3)"});
  auto whole = Subgroup::whole(*d8);
  EXPECT_EQ(center(*d8).order(), 2u);
  EXPECT_EQ(nilpotency_class(*d8, whole, 2), 2u);
  EXPECT_EQ(omega1(*d8, whole, 2).order(), 8u);
  EXPECT_EQ(frattini_p(*d8, whole, 2).order(), 2u);
  EXPECT_TRUE(is_extraspecial(*d8, whole, 2));
  EXPECT_TRUE(is_p_group(whole, 2));
  EXPECT_FALSE(is_p_group(whole, 3));

  auto c4 = fixtures::group_of(4, {"(1 2 3 4)"});
  auto c4w = Subgroup::whole(*c4);
  EXPECT_EQ(nilpotency_class(*c4, c4w, 2), 1u);
  EXPECT_EQ(omega1(*c4, c4w, 2).order(), 2u);
  EXPECT_FALSE(is_extraspecial(*c4, c4w, 2));
  EXPECT_EQ(nilpotency_class(*c4, Subgroup::trivial(*c4), 2), 0u);
}

TEST(PGroup, QuaternionIsExtraspecial) {
  auto q8 = fixtures::group_of(8, {"(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"});
  EXPECT_EQ(q8->order(), 8u);
  auto w = Subgroup::whole(*q8);
  EXPECT_TRUE(is_extraspecial(*q8, w, 2));
  // Q8 has a single involution.
  EXPECT_EQ(omega1(*q8, w, 2).order(), 2u);
}

TEST(PGroup, HeisenbergMod3) {
  // Translations and shears of the affine plane over GF(3).
  auto h = fixtures::group_of(9, {"(1 2 3)(4 5 6)(7 8 9)", "(2 5 8)(3 9 6)"});
  ASSERT_EQ(h->order(), 27u);
  auto w = Subgroup::whole(*h);
  EXPECT_TRUE(is_extraspecial(*h, w, 3));
  EXPECT_EQ(omega1(*h, w, 3).order(), 27u);
  EXPECT_EQ(center(*h).order(), 3u);
}

TEST(PGroup, NonPGroupIsContractViolation) {
  auto s3 = fixtures::group_of(3, {"(1 2 3)", "(1 2)"});
  EXPECT_THROW(nilpotency_class(*s3, Subgroup::whole(*s3), 2), ContractViolation);
  EXPECT_THROW(omega1(*s3, Subgroup::whole(*s3), 3), ContractViolation);
}
