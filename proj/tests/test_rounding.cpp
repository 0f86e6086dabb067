#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "xadd/rounding.hpp"

namespace xadd {
namespace {

using testing::F;

// The rounding table transcribed cell by cell: rows are (r, s) = 00, 01, 10,
// 11; columns are downwards, upwards, to nearest. '=' exact, '-' truncate,
// '+' add one ulp, 't' halfway case decided by the last mantissa bit.
constexpr char kTable[4][3] = {
    {'=', '=', '='},
    {'-', '+', '-'},
    {'-', '+', 't'},
    {'-', '+', '+'},
};

RoundDecision expected_cell(RoundingMode mode, int r, int s, int last_bit) {
  const int col = mode == RoundingMode::Up ? 1 : mode == RoundingMode::NearestEven ? 2 : 0;
  char c = kTable[r * 2 + s][col];
  if (c == 't') c = last_bit ? '+' : '-';
  switch (c) {
    case '=': return {RoundAction::Truncate, Ternary::Exact};
    case '-': return {RoundAction::Truncate, Ternary::Below};
    default: return {RoundAction::Increment, Ternary::Above};
  }
}

TEST(DecideRound, Examples) {
  EXPECT_EQ(decide_round(RoundingMode::Down, {0, 1}, 0), (RoundDecision{RoundAction::Truncate, Ternary::Below}));
  EXPECT_EQ(decide_round(RoundingMode::NearestEven, {1, 0}, 0),
            (RoundDecision{RoundAction::Truncate, Ternary::Below}));
  EXPECT_EQ(decide_round(RoundingMode::Up, {0, 0}, 1), (RoundDecision{RoundAction::Truncate, Ternary::Exact}));
  EXPECT_EQ(decide_round(RoundingMode::NearestEven, {1, 1}, 0),
            (RoundDecision{RoundAction::Increment, Ternary::Above}));
}

TEST(DecideRound, MatchesTableInEveryCell) {
  for (const RoundingMode mode : testing::kAllModes) {
    for (int r = 0; r < 2; ++r) {
      for (int s = 0; s < 2; ++s) {
        for (int last = 0; last < 2; ++last) {
          const RoundDecision got = decide_round(mode, {r, s}, last);
          EXPECT_EQ(got, expected_cell(mode, r, s, last))
              << "mode=" << textio::mode_name(mode) << " r=" << r << " s=" << s << " b_p=" << last;
          EXPECT_EQ(got.ternary == Ternary::Exact, r == 0 && s == 0);
          EXPECT_EQ(got, decide_round(mode == RoundingMode::TowardZero ? RoundingMode::Down : mode, {r, s}, last));
        }
      }
    }
  }
}

std::vector<limb_t> mantissa_of(std::string_view bits) {
  const Float x = make_float(1, 0, static_cast<prec_t>(bits.size()), bits);
  return {x.limbs().begin(), x.limbs().end()};
}

TEST(ApplyIncrement, NoCarryChain) {
  const auto r = apply_increment(mantissa_of("1010"), 4, 0);
  EXPECT_EQ(r.mantissa, mantissa_of("1011"));
  EXPECT_EQ(r.exponent, 0);
  EXPECT_FALSE(r.overflowed);
}

TEST(ApplyIncrement, AllOnesPropagates) {
  const auto r = apply_increment(mantissa_of("1111"), 4, 0);
  EXPECT_EQ(r.mantissa, mantissa_of("1000"));
  EXPECT_EQ(r.exponent, 1);
  EXPECT_FALSE(r.overflowed);
}

TEST(ApplyIncrement, OverflowAtEmax) {
  const Context ctx;
  const auto r = apply_increment(mantissa_of("11"), 2, ctx.emax, ctx);
  EXPECT_EQ(r.mantissa, mantissa_of("10"));
  EXPECT_EQ(r.exponent, ctx.emax + 1);
  EXPECT_TRUE(r.overflowed);
}

TEST(ApplyIncrement, CarryCrossesLimbs) {
  const prec_t p = 2 * kLimbBits + 5;
  const auto r = apply_increment(mantissa_of(std::string(static_cast<std::size_t>(p), '1')), p, 3);
  std::string one(static_cast<std::size_t>(p), '0');
  one[0] = '1';
  EXPECT_EQ(r.mantissa, mantissa_of(one));
  EXPECT_EQ(r.exponent, 4);

  std::string bits(static_cast<std::size_t>(p), '1');
  bits[kLimbBits - 1] = '0';  // last bit of limb 0 absorbs the carry
  std::string want = bits;
  want[kLimbBits - 1] = '1';
  std::fill(want.begin() + kLimbBits, want.end(), '0');
  EXPECT_EQ(apply_increment(mantissa_of(bits), p, 0).mantissa, mantissa_of(want));
}

TEST(RoundToPrec, Examples) {
  for (const RoundingMode mode : testing::kAllModes) {
    const auto r = std::get<Rounded>(round_to_prec(F("0.101"), Precision(3), mode));
    EXPECT_EQ(r.value, F("0.101"));
    EXPECT_EQ(r.ternary, Ternary::Exact);
  }
  const auto down = std::get<Rounded>(round_to_prec(F("0.1011"), Precision(2), RoundingMode::Down));
  EXPECT_EQ(down.value, F("0.10"));
  EXPECT_EQ(down.ternary, Ternary::Below);
  const auto near = std::get<Rounded>(round_to_prec(F("0.1011"), Precision(2), RoundingMode::NearestEven));
  EXPECT_EQ(near.value, F("0.11"));
  EXPECT_EQ(near.ternary, Ternary::Above);
}

TEST(RoundToPrec, WiderTargetPadsWithZeros) {
  const auto r = std::get<Rounded>(round_to_prec(F("0.11e5"), Precision(kLimbBits + 7), RoundingMode::Up));
  EXPECT_EQ(r.ternary, Ternary::Exact);
  EXPECT_EQ(r.value.precision(), kLimbBits + 7);
  EXPECT_EQ(r.value.bit_string(), "11" + std::string(kLimbBits + 5, '0'));
  EXPECT_EQ(r.value.exponent(), 5);
}

TEST(RoundToPrec, OverflowIsReported) {
  const Context ctx;
  const Float x = make_float(1, ctx.emax, 3, "111");
  const auto r = round_to_prec(x, Precision(2), RoundingMode::Up, ctx);
  ASSERT_TRUE(std::holds_alternative<Overflow>(r));
  EXPECT_EQ(std::get<Overflow>(r).ternary, Ternary::Above);
  EXPECT_TRUE(std::holds_alternative<Rounded>(round_to_prec(x, Precision(2), RoundingMode::Down, ctx)));
}

TEST(RoundToPrec, RejectsNegative) {
  EXPECT_THROW(round_to_prec(make_float(-1, 0, 2, "11"), Precision(2), RoundingMode::Up), Error);
}

// Sandwich, ternary sign, nearest error bound and TowardZero == Down, all
// checked with exact integer comparisons.
TEST(RoundToPrec, Properties) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 4000; ++it) {
    const prec_t px = 2 + static_cast<prec_t>(rng() % 200);
    const prec_t p = 2 + static_cast<prec_t>(rng() % 200);
    const Float x = testing::random_float(rng, px, static_cast<exp_t>(rng() % 64) - 32);
    const auto exact = oracle::exact_value(x);

    const auto down = std::get<Rounded>(round_to_prec(x, Precision(p), RoundingMode::Down));
    const auto up = std::get<Rounded>(round_to_prec(x, Precision(p), RoundingMode::Up));
    const auto zero = std::get<Rounded>(round_to_prec(x, Precision(p), RoundingMode::TowardZero));
    const auto near = std::get<Rounded>(round_to_prec(x, Precision(p), RoundingMode::NearestEven));

    ASSERT_LE(testing::compare_values(down.value, exact), 0);
    ASSERT_GE(testing::compare_values(up.value, exact), 0);
    ASSERT_EQ(zero, down);
    for (const auto* r : {&down, &up, &near}) {
      ASSERT_EQ(testing::compare_values(r->value, exact), to_int(r->ternary));
    }
    // |near - x| <= 2^(e - p - 1)
    const auto nv = oracle::exact_value(near.value);
    oracle::BigInt a = nv.magnitude, b = exact.magnitude;
    exp_t ea = nv.binary_exponent, eb = exact.binary_exponent;
    const exp_t lo = std::min(ea, eb);
    a <<= static_cast<unsigned>(ea - lo);
    b <<= static_cast<unsigned>(eb - lo);
    const oracle::BigInt diff = a > b ? oracle::BigInt(a - b) : oracle::BigInt(b - a);
    ASSERT_LE(oracle::compare_scaled(diff, lo, 1, x.exponent() - p - 1), 0);
  }
}

}  // namespace
}  // namespace xadd
