#include "xadd/rounding.hpp"

#include <algorithm>

namespace xadd {

RoundDecision decide_round(RoundingMode mode, RoundSticky rs, int last_bit) {
  if (rs.r == 0 && rs.s == 0) return {RoundAction::Truncate, Ternary::Exact};
  switch (mode) {
    case RoundingMode::Down:
    case RoundingMode::TowardZero:  // positive values only
      return {RoundAction::Truncate, Ternary::Below};
    case RoundingMode::Up:
      return {RoundAction::Increment, Ternary::Above};
    case RoundingMode::NearestEven:
      if (rs.r == 0) return {RoundAction::Truncate, Ternary::Below};
      if (rs.s == 1 || last_bit == 1) return {RoundAction::Increment, Ternary::Above};
      return {RoundAction::Truncate, Ternary::Below};
  }
  return {RoundAction::Truncate, Ternary::Exact};
}

bool increment_mantissa(std::span<limb_t> mantissa, prec_t p) {
  const int unused = static_cast<int>((kLimbBits - p % kLimbBits) % kLimbBits);
  limb_t add = limb_t{1} << unused;
  for (auto it = mantissa.rbegin(); it != mantissa.rend(); ++it) {
    *it += add;
    if (*it >= add) return false;
    add = 1;
  }
  // Every significant bit was 1: the sum is exactly 1 = 0.1 * 2^1.
  mantissa.front() = limb_t{1} << (kLimbBits - 1);
  return true;
}

IncrementResult apply_increment(std::span<const limb_t> mantissa, prec_t p, exp_t exponent,
                                const Context& ctx) {
  IncrementResult out{std::vector<limb_t>(mantissa.begin(), mantissa.end()), exponent, false};
  if (increment_mantissa(out.mantissa, p)) {
    ++out.exponent;
    out.overflowed = out.exponent > ctx.emax;
  }
  return out;
}

std::variant<Rounded, Overflow> round_to_prec(const Float& x, Precision p, RoundingMode mode,
                                              const Context& ctx) {
  check_precision(p.bits(), ctx);
  if (x.sign() < 0) throw Error(ErrorCode::NegativeOperand, "round_to_prec expects a positive value");
  const prec_t target = p.bits();
  std::vector<limb_t> limbs(static_cast<std::size_t>(limbs_for(target)), 0);
  const auto src = x.limbs();
  const std::size_t ncopy = std::min(limbs.size(), src.size());
  std::copy_n(src.begin(), ncopy, limbs.begin());

  if (target >= x.precision()) {
    return Rounded{Float::from_limbs(x.sign(), x.exponent(), target, std::move(limbs), ctx),
                   Ternary::Exact};
  }

  limbs.back() &= last_limb_mask(target);
  RoundSticky rs{x.bit(target + 1), 0};
  {
    // Sticky: any set bit strictly below position target + 1.
    const prec_t from = target + 2;
    if (from <= x.precision()) {
      const prec_t k0 = (from - 1) / kLimbBits;
      const int off = static_cast<int>((from - 1) % kLimbBits);
      limb_t head = src[static_cast<std::size_t>(k0)] & (kLimbMax >> off);
      rs.s = head != 0;
      for (std::size_t k = static_cast<std::size_t>(k0) + 1; !rs.s && k < src.size(); ++k) {
        rs.s = src[k] != 0;
      }
    }
  }

  const RoundDecision dec = decide_round(mode, rs, x.bit(target));
  exp_t e = x.exponent();
  if (dec.action == RoundAction::Increment && increment_mantissa(limbs, target)) ++e;
  if (e > ctx.emax) return Overflow{mode, x.sign(), dec.ternary, e};
  return Rounded{Float::from_limbs(x.sign(), e, target, std::move(limbs), ctx), dec.ternary};
}

}  // namespace xadd
