#pragma once

// Positive-normalized binary floating-point values with per-value precision.
//
// A value is sign * 0.b1 b2 ... bp * 2^exponent with b1 = 1. The mantissa is
// an array of limbs stored most-significant limb first; bit b1 is the top bit
// of limb 0 and the unused low bits of the last limb are always zero.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#ifndef XADD_LIMB_BITS
#define XADD_LIMB_BITS 64
#endif

namespace xadd {

#if XADD_LIMB_BITS == 64
using limb_t = std::uint64_t;
#elif XADD_LIMB_BITS == 32
using limb_t = std::uint32_t;
#else
#error "XADD_LIMB_BITS must be 32 or 64"
#endif

inline constexpr int kLimbBits = XADD_LIMB_BITS;
inline constexpr limb_t kLimbMax = ~limb_t{0};

using exp_t = std::int64_t;
using prec_t = std::int64_t;

/// Exponent range and precision cap. Defaults follow MPFR's exponent range.
struct Context {
  exp_t emin = 1 - (exp_t{1} << 30);
  exp_t emax = (exp_t{1} << 30) - 1;
  prec_t max_prec = prec_t{1} << 24;
};

enum class ErrorCode {
  InvalidPrecision,
  NotNormalized,
  ExponentOutOfRange,
  InvalidSign,
  NegativeOperand,
  SyntaxError,
  InvalidCombination,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Number of mantissa bits; validated against a Context where it is used.
class Precision {
 public:
  constexpr explicit Precision(prec_t bits) : bits_(bits) {}
  constexpr prec_t bits() const { return bits_; }
  constexpr bool operator==(const Precision&) const = default;

 private:
  prec_t bits_;
};

enum class RoundingMode { Down, Up, TowardZero, NearestEven };

/// Sign of (rounded - exact).
enum class Ternary : int { Below = -1, Exact = 0, Above = 1 };

constexpr int to_int(Ternary t) { return static_cast<int>(t); }

/// Limbs needed to hold `p` mantissa bits.
constexpr prec_t limbs_for(prec_t p) { return (p + kLimbBits - 1) / kLimbBits; }

/// Mask selecting the significant bits of the last limb of a p-bit mantissa.
constexpr limb_t last_limb_mask(prec_t p) {
  const int used = static_cast<int>(p % kLimbBits);
  return used == 0 ? kLimbMax : kLimbMax << (kLimbBits - used);
}

void check_precision(prec_t p, const Context& ctx);

class Float {
 public:
  /// Validates every representation invariant; throws Error on violation.
  static Float from_limbs(int sign, exp_t exponent, prec_t precision, std::vector<limb_t> limbs,
                          const Context& ctx = {});

  int sign() const { return sign_; }
  exp_t exponent() const { return exponent_; }
  prec_t precision() const { return precision_; }
  std::span<const limb_t> limbs() const { return limbs_; }

  /// Bit b_i of the mantissa (1-based); positions past the precision read as 0.
  int bit(prec_t i) const;

  /// The mantissa bits b1..bp as a '0'/'1' string.
  std::string bit_string() const;

  bool operator==(const Float&) const = default;

 private:
  Float(int sign, exp_t exponent, prec_t precision, std::vector<limb_t> limbs)
      : sign_(sign), exponent_(exponent), precision_(precision), limbs_(std::move(limbs)) {}

  int sign_;
  exp_t exponent_;
  prec_t precision_;
  std::vector<limb_t> limbs_;
};

Float make_float(int sign, exp_t exponent, prec_t precision, std::string_view bits,
                 const Context& ctx = {});

inline int get_bit(const Float& x, prec_t i) { return x.bit(i); }

/// True iff the leading mantissa bit is set, the non-significant low bits are
/// zero and the limb count matches the precision.
bool is_normalized(int sign, prec_t precision, std::span<const limb_t> limbs);
inline bool is_normalized(const Float& x) {
  return is_normalized(x.sign(), x.precision(), x.limbs());
}

}  // namespace xadd
