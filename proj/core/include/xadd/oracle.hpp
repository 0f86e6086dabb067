#pragma once

// Brute-force reference for add_positive: forms the exact sum as an unbounded
// integer and rounds it by reading the rounding and sticky bits directly.
// Shares nothing with the limb engine beyond the Float type and decide_round.

#include <boost/multiprecision/cpp_int.hpp>

#include "xadd/add.hpp"
#include "xadd/float.hpp"
#include "xadd/rounding.hpp"

namespace xadd::oracle {

using BigInt = boost::multiprecision::cpp_int;

/// value = magnitude * 2^binary_exponent, with binary_exponent the weight of
/// the lowest represented bit of either operand (min(e_x - m, e_y - n)).
struct ExactSum {
  BigInt magnitude;
  exp_t binary_exponent = 0;
};

/// The mantissa of x as an integer M with value(x) = M * 2^(e - p).
BigInt mantissa_integer(const Float& x);

ExactSum exact_value(const Float& x);
ExactSum exact_add(const Float& x, const Float& y);

/// Sign of a * 2^ea - b * 2^eb for non-negative a, b.
int compare_scaled(const BigInt& a, exp_t ea, const BigInt& b, exp_t eb);
int compare(const ExactSum& a, const ExactSum& b);

std::variant<Rounded, Overflow> round_exact(const ExactSum& v, Precision p, RoundingMode mode,
                                            const Context& ctx = {});

/// round_exact in the add_positive result shape (stats empty).
AddResult round_sum(const ExactSum& v, Precision p, RoundingMode mode, const Context& ctx = {});

/// Reference result with the same contract as add_positive (stats empty).
AddResult exact_add_round(const Float& x, const Float& y, Precision p, RoundingMode mode,
                          const Context& ctx = {});

}  // namespace xadd::oracle
