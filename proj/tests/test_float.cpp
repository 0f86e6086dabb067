#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "xadd/float.hpp"

namespace xadd {
namespace {

constexpr limb_t kTopBit = limb_t{1} << (kLimbBits - 1);

TEST(MakeFloat, OneHalf) {
  const Float x = make_float(1, 0, 2, "10");
  EXPECT_EQ(x.sign(), 1);
  EXPECT_EQ(x.exponent(), 0);
  EXPECT_EQ(x.precision(), 2);
  ASSERT_EQ(x.limbs().size(), 1u);
  EXPECT_EQ(x.limbs()[0], kTopBit);
}

TEST(MakeFloat, Five) {
  const Float x = make_float(1, 3, 3, "101");
  EXPECT_EQ(x.limbs()[0], kTopBit | (kTopBit >> 2));
  const auto v = oracle::exact_value(x);
  EXPECT_EQ(oracle::compare_scaled(v.magnitude, v.binary_exponent, 5, 0), 0);
}

TEST(MakeFloat, Errors) {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::SyntaxError;
  };
  EXPECT_EQ(code_of([] { make_float(1, 0, 2, "01"); }), ErrorCode::NotNormalized);
  EXPECT_EQ(code_of([] { make_float(1, 0, 1, "1"); }), ErrorCode::InvalidPrecision);
  EXPECT_EQ(code_of([] { make_float(1, 0, 3, "10"); }), ErrorCode::InvalidPrecision);
  EXPECT_EQ(code_of([] { make_float(1, 0, 2, "1x"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { make_float(0, 0, 2, "10"); }), ErrorCode::InvalidSign);
  EXPECT_EQ(code_of([] { make_float(1, exp_t{1} << 30, 2, "10"); }), ErrorCode::ExponentOutOfRange);
  EXPECT_EQ(code_of([] { make_float(1, -(exp_t{1} << 30), 2, "10"); }), ErrorCode::ExponentOutOfRange);

  const Context narrow{-8, 8, 16};
  EXPECT_NO_THROW(make_float(1, 8, 2, "11", narrow));
  EXPECT_EQ(code_of([&] { make_float(1, 9, 2, "11", narrow); }), ErrorCode::ExponentOutOfRange);
  EXPECT_EQ(code_of([&] { make_float(1, 0, 17, std::string(17, '1'), narrow); }),
            ErrorCode::InvalidPrecision);
}

TEST(MakeFloat, BoundsAreInclusive) {
  const Context ctx;
  EXPECT_NO_THROW(make_float(1, ctx.emin, 2, "10"));
  EXPECT_NO_THROW(make_float(1, ctx.emax, 2, "10"));
  EXPECT_EQ(ctx.emin, 1 - (exp_t{1} << 30));
  EXPECT_EQ(ctx.emax, (exp_t{1} << 30) - 1);
  EXPECT_EQ(ctx.max_prec, prec_t{1} << 24);
}

TEST(FromLimbs, RejectsDirtyLowBitsAndUnnormalized) {
  EXPECT_THROW(Float::from_limbs(1, 0, 3, {kTopBit | 1}), Error);
  EXPECT_THROW(Float::from_limbs(1, 0, 3, {kTopBit >> 1}), Error);
  EXPECT_THROW(Float::from_limbs(1, 0, 3, {kTopBit, 0}), Error);
  EXPECT_NO_THROW(Float::from_limbs(1, 0, kLimbBits, {kLimbMax}));
}

TEST(GetBit, ReadsStoredBitsAndZeroBeyond) {
  const Float x = make_float(1, 0, 3, "101");
  EXPECT_EQ(get_bit(x, 1), 1);
  EXPECT_EQ(get_bit(x, 2), 0);
  EXPECT_EQ(get_bit(x, 3), 1);
  EXPECT_EQ(get_bit(x, 7), 0);
  EXPECT_EQ(get_bit(x, 10 * kLimbBits), 0);
}

// Every precision up to four limbs plus a few bits, so each alignment of the
// last significant bit inside a limb is covered.
TEST(MakeFloat, RoundTripAcrossLimbBoundaries) {
  std::mt19937_64 rng(7);
  for (prec_t p = 2; p <= 4 * kLimbBits + 3; ++p) {
    for (int rep = 0; rep < 4; ++rep) {
      const std::string bits = testing::random_mantissa(rng, p);
      const exp_t e = static_cast<exp_t>(rng() % 2001) - 1000;
      const int sign = (rng() & 1) ? 1 : -1;
      const Float x = make_float(sign, e, p, bits);
      ASSERT_EQ(x.sign(), sign);
      ASSERT_EQ(x.exponent(), e);
      ASSERT_EQ(x.bit_string(), bits);
      ASSERT_EQ(static_cast<prec_t>(x.limbs().size()), limbs_for(p));
      ASSERT_TRUE(is_normalized(x));
      for (prec_t i = p + 1; i <= p + kLimbBits + 1; ++i) ASSERT_EQ(get_bit(x, i), 0);
    }
  }
}

TEST(IsNormalized, Validator) {
  EXPECT_TRUE(is_normalized(1, 2, std::vector<limb_t>{kTopBit}));
  EXPECT_FALSE(is_normalized(1, 2, std::vector<limb_t>{kTopBit >> 1}));
  EXPECT_FALSE(is_normalized(1, 2, std::vector<limb_t>{kTopBit | 1}));
  EXPECT_FALSE(is_normalized(2, 2, std::vector<limb_t>{kTopBit}));
  EXPECT_FALSE(is_normalized(1, kLimbBits + 1, std::vector<limb_t>{kTopBit}));
}

}  // namespace
}  // namespace xadd
