#include "xadd/float.hpp"

namespace xadd {

void check_precision(prec_t p, const Context& ctx) {
  if (p < 2 || p > ctx.max_prec) {
    throw Error(ErrorCode::InvalidPrecision,
                "precision " + std::to_string(p) + " outside [2, " + std::to_string(ctx.max_prec) + "]");
  }
}

namespace {

void check_exponent(exp_t e, const Context& ctx) {
  if (e < ctx.emin || e > ctx.emax) {
    throw Error(ErrorCode::ExponentOutOfRange, "exponent " + std::to_string(e) + " out of range");
  }
}

}  // namespace

bool is_normalized(int sign, prec_t precision, std::span<const limb_t> limbs) {
  if (sign != 1 && sign != -1) return false;
  if (precision < 1 || static_cast<prec_t>(limbs.size()) != limbs_for(precision)) return false;
  if ((limbs.front() >> (kLimbBits - 1)) == 0) return false;
  return (limbs.back() & ~last_limb_mask(precision)) == 0;
}

Float Float::from_limbs(int sign, exp_t exponent, prec_t precision, std::vector<limb_t> limbs,
                        const Context& ctx) {
  if (sign != 1 && sign != -1) throw Error(ErrorCode::InvalidSign, "sign must be +1 or -1");
  check_precision(precision, ctx);
  check_exponent(exponent, ctx);
  if (static_cast<prec_t>(limbs.size()) != limbs_for(precision)) {
    throw Error(ErrorCode::InvalidPrecision, "limb count does not match precision");
  }
  if ((limbs.front() >> (kLimbBits - 1)) == 0) {
    throw Error(ErrorCode::NotNormalized, "leading mantissa bit is 0");
  }
  if ((limbs.back() & ~last_limb_mask(precision)) != 0) {
    throw Error(ErrorCode::NotNormalized, "non-significant low bits are set");
  }
  return Float(sign, exponent, precision, std::move(limbs));
}

int Float::bit(prec_t i) const {
  if (i < 1 || i > precision_) return 0;
  const prec_t k = (i - 1) / kLimbBits;
  const int off = static_cast<int>((i - 1) % kLimbBits);
  return static_cast<int>((limbs_[k] >> (kLimbBits - 1 - off)) & 1);
}

std::string Float::bit_string() const {
  std::string out(static_cast<std::size_t>(precision_), '0');
  for (prec_t i = 1; i <= precision_; ++i) {
    if (bit(i)) out[static_cast<std::size_t>(i - 1)] = '1';
  }
  return out;
}

Float make_float(int sign, exp_t exponent, prec_t precision, std::string_view bits,
                 const Context& ctx) {
  check_precision(precision, ctx);
  if (static_cast<prec_t>(bits.size()) != precision) {
    throw Error(ErrorCode::InvalidPrecision, "bit string length differs from precision");
  }
  std::vector<limb_t> limbs(static_cast<std::size_t>(limbs_for(precision)), 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    const char c = bits[i];
    if (c != '0' && c != '1') throw Error(ErrorCode::SyntaxError, "mantissa digit is not binary");
    if (c == '1') {
      limbs[i / kLimbBits] |= limb_t{1} << (kLimbBits - 1 - static_cast<int>(i % kLimbBits));
    }
  }
  return Float::from_limbs(sign, exponent, precision, std::move(limbs), ctx);
}

}  // namespace xadd
