#include "xadd/oracle.hpp"

#include <string>

namespace xadd::oracle {

BigInt mantissa_integer(const Float& x) {
  BigInt m = 0;
  for (const limb_t l : x.limbs()) {
    m <<= kLimbBits;
    m |= l;
  }
  const auto unused = static_cast<unsigned>(static_cast<prec_t>(x.limbs().size()) * kLimbBits - x.precision());
  return m >> unused;
}

ExactSum exact_value(const Float& x) {
  return {mantissa_integer(x), x.exponent() - x.precision()};
}

ExactSum exact_add(const Float& x, const Float& y) {
  ExactSum a = exact_value(x);
  ExactSum b = exact_value(y);
  if (a.binary_exponent < b.binary_exponent) std::swap(a, b);
  const auto shift = static_cast<unsigned>(a.binary_exponent - b.binary_exponent);
  return {(a.magnitude << shift) + b.magnitude, b.binary_exponent};
}

int compare_scaled(const BigInt& a, exp_t ea, const BigInt& b, exp_t eb) {
  if (ea >= eb) {
    const BigInt lhs = a << static_cast<unsigned>(ea - eb);
    return lhs < b ? -1 : (lhs > b ? 1 : 0);
  }
  const BigInt rhs = b << static_cast<unsigned>(eb - ea);
  return a < rhs ? -1 : (a > rhs ? 1 : 0);
}

int compare(const ExactSum& a, const ExactSum& b) {
  return compare_scaled(a.magnitude, a.binary_exponent, b.magnitude, b.binary_exponent);
}

std::variant<Rounded, Overflow> round_exact(const ExactSum& v, Precision p, RoundingMode mode,
                                            const Context& ctx) {
  check_precision(p.bits(), ctx);
  const prec_t target = p.bits();
  const auto len = static_cast<prec_t>(boost::multiprecision::msb(v.magnitude)) + 1;
  exp_t e = v.binary_exponent + len;

  BigInt top;
  RoundSticky rs;
  if (len <= target) {
    top = v.magnitude << static_cast<unsigned>(target - len);
  } else {
    const auto drop = static_cast<unsigned>(len - target);
    top = v.magnitude >> drop;
    rs.r = boost::multiprecision::bit_test(v.magnitude, drop - 1) ? 1 : 0;
    const BigInt below = v.magnitude & ((BigInt(1) << (drop - 1)) - 1);
    rs.s = below != 0 ? 1 : 0;
  }

  const int last = boost::multiprecision::bit_test(top, 0) ? 1 : 0;
  const RoundDecision dec = decide_round(mode, rs, last);
  if (dec.action == RoundAction::Increment) {
    top += 1;
    if (top == (BigInt(1) << static_cast<unsigned>(target))) {
      top >>= 1;
      ++e;
    }
  }
  if (e > ctx.emax) return Overflow{mode, 1, dec.ternary, e};

  // Left-align the p-bit integer into limbs, most significant limb first.
  const prec_t nlimbs = limbs_for(target);
  BigInt aligned = top << static_cast<unsigned>(nlimbs * kLimbBits - target);
  std::vector<limb_t> limbs(static_cast<std::size_t>(nlimbs));
  for (prec_t k = nlimbs - 1; k >= 0; --k) {
    limbs[static_cast<std::size_t>(k)] = static_cast<limb_t>(aligned & BigInt(kLimbMax));
    aligned >>= kLimbBits;
  }
  return Rounded{Float::from_limbs(1, e, target, std::move(limbs), ctx), dec.ternary};
}

AddResult exact_add_round(const Float& x, const Float& y, Precision p, RoundingMode mode,
                          const Context& ctx) {
  if (x.sign() < 0 || y.sign() < 0) {
    throw Error(ErrorCode::NegativeOperand, "exact_add_round expects positive operands");
  }
  return round_sum(exact_add(x, y), p, mode, ctx);
}

AddResult round_sum(const ExactSum& v, Precision p, RoundingMode mode, const Context& ctx) {
  auto r = round_exact(v, p, mode, ctx);
  if (auto* ov = std::get_if<Overflow>(&r)) return *ov;
  auto& rounded = std::get<Rounded>(r);
  return AddOutcome{std::move(rounded.value), rounded.ternary, {}, 0};
}

}  // namespace xadd::oracle
