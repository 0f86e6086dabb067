#pragma once

// Exactly rounded addition of two positive values of independent precisions.
//
// Positions are counted from the leading bit of the operand with the larger
// exponent (x): position i has weight 2^(e_x - i). The operand y, shifted by
// d = e_x - e_y, occupies positions d+1 .. d+n. The first p+2 positions form
// the main term t; everything below is the error term eps, with
// 0 <= eps < 2u where u is the weight of position p+2. The error term is
// classified with a left-to-right scan over limb-sized blocks that stops at
// the first position deciding how eps compares with 0 or u.

#include <array>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "xadd/float.hpp"
#include "xadd/rounding.hpp"

namespace xadd {

struct Alignment {
  exp_t d = 0;           // e_x - e_y >= 0
  exp_t limb_shift = 0;  // d / W
  int bit_shift = 0;     // d % W

  static Alignment of(const Float& x, const Float& y);
};

/// Sum of the first p+2 positions of x and aligned y.
///
/// `mantissa` holds the p result bits (ceil(p/W) limbs, masked), r_t and f are
/// the bits at positions p+1 and p+2 of t. On a carry out of the top the
/// exponent is e_x + 1, t is renormalized by a one-bit right shift, and the
/// bit pushed out (old position p+2) is kept in `displaced`; it belongs to
/// the error term from then on.
struct MainTerm {
  std::vector<limb_t> mantissa;
  exp_t exponent = 0;
  int r_t = 0;
  int f = 0;
  bool carried = false;
  int displaced = 0;

  /// The p+2 bits of t as a '0'/'1' string (mantissa, r_t, f).
  std::string bits(prec_t p) const;
};

/// Relation of the error term to 0 (when f = 0) or to u (when f = 1).
enum class ErrorClass { EqZero, GtZero, LtU, EqU, GtU };

/// Reading status of the trailing parts x'' and y'' at a scan step.
enum class ScanState {
  XRemains_YNotStarted,
  Overlap,
  XRemains_YDone,
  XDone_YNotStarted,
  XDone_YRemains,
  BothDone,
};

struct ScanStats {
  prec_t x_limbs_read = 0;  // limbs [0, x_limbs_read) of x may have been read
  prec_t y_limbs_read = 0;
  prec_t trailing_bits_examined = 0;  // positions past p+2 consumed by the scan
  std::optional<prec_t> q_found_at;   // first position with x_q == y_{q-d}

  std::array<ScanState, 6> states{};
  int state_count = 0;

  std::span<const ScanState> state_trace() const {
    return {states.data(), static_cast<std::size_t>(state_count)};
  }
  void enter(ScanState s);
  void merge_reads(const ScanStats& other);
};

struct RfeOutcome {
  RoundSticky rs;
  bool carry = false;  // 1 must be added at position p+1 and propagated
  bool operator==(const RfeOutcome&) const = default;
};

struct AddOutcome {
  Float result;
  Ternary ternary = Ternary::Exact;
  ScanStats stats;
  int rfe_row = 0;  // which of the ten (r_t, f, eps) cases decided the rounding
};

using AddResult = std::variant<AddOutcome, Overflow>;

/// Rounds x + y to precision p. Both operands must be positive.
AddResult add_positive(const Float& x, const Float& y, Precision p, RoundingMode mode,
                       const Context& ctx = {});

MainTerm compute_main_term(const Float& x, const Float& y, Precision p, const Alignment& align,
                           ScanStats* stats = nullptr);

/// Classifies the error term from `start_pos` onward. With f = 0 the result is
/// EqZero or GtZero; with f = 1 it is LtU, EqU or GtU.
std::pair<ErrorClass, ScanStats> classify_error(const Float& x, const Float& y,
                                                const Alignment& align, int f, prec_t start_pos);

/// Rounding and sticky bits of x + y from the main term's r_t and f and the
/// error class. Throws Error(InvalidCombination) for unreachable inputs.
RfeOutcome combine_rfe(int r_t, int f, ErrorClass ec);

/// 1-based row of the (r_t, f, eps) case table, or 0 when unreachable.
int rfe_row(int r_t, int f, ErrorClass ec);

/// Exit predicates of the trailing scan, applied to blocks of x and aligned y
/// restricted to `valid` positions: a zero run continues while no bit is set,
/// a ones run continues while every position holds exactly one set bit.
constexpr bool zero_run_continues(limb_t xb, limb_t yb, limb_t valid = kLimbMax) {
  return ((xb | yb) & valid) == 0;
}
constexpr bool ones_run_continues(limb_t xb, limb_t yb, limb_t valid = kLimbMax) {
  return (~(xb ^ yb) & valid) == 0;
}

}  // namespace xadd
