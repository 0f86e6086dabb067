#pragma once

#include <span>
#include <variant>
#include <vector>

#include "xadd/float.hpp"

namespace xadd {

/// Rounding bit (weight 2^-(p+1) of the mantissa) and sticky bit (OR of all
/// lower bits) of a positive exact value.
struct RoundSticky {
  int r = 0;
  int s = 0;
  bool operator==(const RoundSticky&) const = default;
};

enum class RoundAction { Truncate, Increment };

struct RoundDecision {
  RoundAction action = RoundAction::Truncate;
  Ternary ternary = Ternary::Exact;
  bool operator==(const RoundDecision&) const = default;
};

/// Rounding of a positive value from its truncated mantissa's last bit and
/// (r, s). Ties under NearestEven go to the even mantissa.
RoundDecision decide_round(RoundingMode mode, RoundSticky rs, int last_bit);

/// Adds 2^-p to a normalized p-bit mantissa in place. Returns true on carry
/// out of the top bit, in which case the mantissa is reset to 0.100...0 and
/// the caller must bump the exponent.
bool increment_mantissa(std::span<limb_t> mantissa, prec_t p);

struct IncrementResult {
  std::vector<limb_t> mantissa;
  exp_t exponent = 0;
  bool overflowed = false;
};

IncrementResult apply_increment(std::span<const limb_t> mantissa, prec_t p, exp_t exponent,
                                const Context& ctx = {});

/// Reported instead of a value when the rounded exponent exceeds emax. The
/// ternary is the one the rounding would have had with an unbounded exponent.
struct Overflow {
  RoundingMode mode = RoundingMode::NearestEven;
  int sign = 1;
  Ternary ternary = Ternary::Exact;
  exp_t exponent = 0;
  bool operator==(const Overflow&) const = default;
};

struct Rounded {
  Float value;
  Ternary ternary;
  bool operator==(const Rounded&) const = default;
};

std::variant<Rounded, Overflow> round_to_prec(const Float& x, Precision p, RoundingMode mode,
                                              const Context& ctx = {});

}  // namespace xadd
