#include "xadd/add.hpp"

#include <algorithm>
#include <bit>

namespace xadd {

namespace {

// Bits at block offsets [off, W-1] (offset 0 is the most significant bit).
constexpr limb_t mask_from(int off) { return kLimbMax >> off; }
// Bits at block offsets [0, off].
constexpr limb_t mask_upto(int off) { return kLimbMax << (kLimbBits - 1 - off); }

int bit_at(std::span<const limb_t> limbs, exp_t pos) {
  const auto k = static_cast<std::size_t>((pos - 1) / kLimbBits);
  const int off = static_cast<int>((pos - 1) % kLimbBits);
  return static_cast<int>((limbs[k] >> (kLimbBits - 1 - off)) & 1);
}

// Block k covers positions kW+1 .. (k+1)W. Blocks of y are assembled on the
// fly from the two limbs straddling the block. Every limb dereference is
// recorded in the stats so unread limbs can be identified afterwards.
class BlockReader {
 public:
  BlockReader(const Float& x, const Float& y, const Alignment& align, ScanStats& stats)
      : x_(x.limbs()), y_(y.limbs()), align_(align), stats_(stats) {}

  limb_t x_block(exp_t k) {
    if (k < 0 || k >= static_cast<exp_t>(x_.size())) return 0;
    stats_.x_limbs_read = std::max(stats_.x_limbs_read, k + 1);
    return x_[static_cast<std::size_t>(k)];
  }

  limb_t y_block(exp_t k) {
    const exp_t hi = k - align_.limb_shift;
    const int b = align_.bit_shift;
    if (b == 0) return y_limb(hi);
    return (y_limb(hi) >> b) | (y_limb(hi - 1) << (kLimbBits - b));
  }

 private:
  limb_t y_limb(exp_t j) {
    if (j < 0 || j >= static_cast<exp_t>(y_.size())) return 0;
    stats_.y_limbs_read = std::max(stats_.y_limbs_read, j + 1);
    return y_[static_cast<std::size_t>(j)];
  }

  std::span<const limb_t> x_;
  std::span<const limb_t> y_;
  const Alignment& align_;
  ScanStats& stats_;
};

ScanState state_of(bool x_done, bool y_not_started, bool y_done) {
  if (!x_done) {
    if (y_not_started) return ScanState::XRemains_YNotStarted;
    return y_done ? ScanState::XRemains_YDone : ScanState::Overlap;
  }
  if (y_not_started) return ScanState::XDone_YNotStarted;
  return y_done ? ScanState::BothDone : ScanState::XDone_YRemains;
}

}  // namespace

Alignment Alignment::of(const Float& x, const Float& y) {
  const exp_t d = x.exponent() - y.exponent();
  if (d < 0) throw std::invalid_argument("Alignment::of expects e_x >= e_y");
  return {d, d / kLimbBits, static_cast<int>(d % kLimbBits)};
}

std::string MainTerm::bits(prec_t p) const {
  std::string out;
  out.reserve(static_cast<std::size_t>(p + 2));
  for (prec_t i = 1; i <= p; ++i) out.push_back(bit_at(mantissa, i) ? '1' : '0');
  out.push_back(r_t ? '1' : '0');
  out.push_back(f ? '1' : '0');
  return out;
}

void ScanStats::enter(ScanState s) {
  if (state_count > 0 && states[static_cast<std::size_t>(state_count - 1)] == s) return;
  if (state_count < static_cast<int>(states.size())) states[static_cast<std::size_t>(state_count++)] = s;
}

void ScanStats::merge_reads(const ScanStats& other) {
  x_limbs_read = std::max(x_limbs_read, other.x_limbs_read);
  y_limbs_read = std::max(y_limbs_read, other.y_limbs_read);
}

MainTerm compute_main_term(const Float& x, const Float& y, Precision p, const Alignment& align,
                           ScanStats* stats) {
  ScanStats local;
  BlockReader rd(x, y, align, stats ? *stats : local);

  const prec_t prec = p.bits();
  const exp_t len = prec + 2;
  const exp_t nt = limbs_for(len);
  const exp_t m = x.precision();
  const exp_t y_begin = align.d + 1;
  const exp_t y_end = align.d + y.precision();

  std::vector<limb_t> t(static_cast<std::size_t>(nt));
  limb_t carry = 0;
  for (exp_t k = nt - 1; k >= 0; --k) {
    const exp_t lo = k * kLimbBits + 1;
    const exp_t hi = lo + kLimbBits - 1;
    const limb_t valid = k == nt - 1 ? mask_upto(static_cast<int>(len - 1 - k * kLimbBits)) : kLimbMax;
    const limb_t xb = lo <= m ? rd.x_block(k) & valid : 0;
    const limb_t yb = (y_begin <= len && hi >= y_begin && lo <= y_end) ? rd.y_block(k) & valid : 0;
    const limb_t s = xb + yb;
    const limb_t c1 = s < xb;
    const limb_t s2 = s + carry;
    const limb_t c2 = s2 < s;
    t[static_cast<std::size_t>(k)] = s2;
    carry = c1 | c2;
  }

  MainTerm mt;
  mt.carried = carry != 0;
  mt.exponent = x.exponent();
  if (mt.carried) {
    // t >= 1: renormalize by one position, the old bit p+2 drops out.
    mt.displaced = bit_at(t, len);
    for (exp_t k = nt - 1; k > 0; --k) {
      const auto i = static_cast<std::size_t>(k);
      t[i] = (t[i] >> 1) | (t[i - 1] << (kLimbBits - 1));
    }
    t[0] = (t[0] >> 1) | (limb_t{1} << (kLimbBits - 1));
    ++mt.exponent;
  }
  mt.r_t = bit_at(t, prec + 1);
  mt.f = bit_at(t, prec + 2);
  t.resize(static_cast<std::size_t>(limbs_for(prec)));
  t.back() &= last_limb_mask(prec);
  mt.mantissa = std::move(t);
  return mt;
}

std::pair<ErrorClass, ScanStats> classify_error(const Float& x, const Float& y,
                                                const Alignment& align, int f, prec_t start_pos) {
  ScanStats stats;
  BlockReader rd(x, y, align, stats);

  const exp_t m = x.precision();
  const exp_t y_begin = align.d + 1;
  const exp_t y_end = align.d + y.precision();
  const exp_t last = std::max(m, y_end);

  auto finish = [&](ErrorClass ec, exp_t consumed_to) {
    stats.trailing_bits_examined = std::max<exp_t>(0, std::min(consumed_to, last) - (start_pos - 1));
    return std::pair{ec, stats};
  };

  // With f = 1 we first look for q; once x_q = y_{q-d} = 1 the error is at
  // least u and the rest of the scan only asks whether any bit is left.
  bool ones = f == 1;
  bool at_least_u = false;
  exp_t pos = start_pos;
  for (;;) {
    const bool x_done = pos > m;
    const bool y_not_started = y_begin >= pos;
    const bool y_done = pos > y_end;
    stats.enter(state_of(x_done, y_not_started, y_done));

    if (ones) {
      // Bits from a single mantissa cannot produce the carry reaching u.
      if (x_done || y_done) return finish(ErrorClass::LtU, pos - 1);
    } else {
      // y's leading bit is a trailing 1.
      if (y_not_started) return finish(at_least_u ? ErrorClass::GtU : ErrorClass::GtZero, pos - 1);
      if (x_done && y_done) return finish(at_least_u ? ErrorClass::EqU : ErrorClass::EqZero, pos - 1);
    }

    const exp_t k = (pos - 1) / kLimbBits;
    const exp_t lo = k * kLimbBits + 1;
    const exp_t hi = lo + kLimbBits - 1;
    const limb_t valid = mask_from(static_cast<int>(pos - lo));
    const limb_t xb = x_done ? 0 : rd.x_block(k);
    const limb_t yb = (!y_done && hi >= y_begin) ? rd.y_block(k) : 0;

    if (ones) {
      if (ones_run_continues(xb, yb, valid)) {
        pos = hi + 1;
        continue;
      }
      const limb_t eq = ~(xb ^ yb) & valid;
      const int qoff = std::countl_zero(eq);
      const exp_t q = lo + qoff;
      stats.q_found_at = q;
      if ((xb >> (kLimbBits - 1 - qoff)) & 1) {
        at_least_u = true;
        ones = false;
        pos = q + 1;
        continue;
      }
      return finish(ErrorClass::LtU, q);
    }

    if (zero_run_continues(xb, yb, valid)) {
      pos = hi + 1;
      continue;
    }
    const exp_t hit = lo + std::countl_zero(static_cast<limb_t>((xb | yb) & valid));
    return finish(at_least_u ? ErrorClass::GtU : ErrorClass::GtZero, hit);
  }
}

int rfe_row(int r_t, int f, ErrorClass ec) {
  const int base = r_t ? 5 : 0;
  if (f == 0) {
    if (ec == ErrorClass::EqZero) return base + 1;
    if (ec == ErrorClass::GtZero) return base + 2;
    return 0;
  }
  switch (ec) {
    case ErrorClass::LtU: return base + 3;
    case ErrorClass::EqU: return base + 4;
    case ErrorClass::GtU: return base + 5;
    default: return 0;
  }
}

RfeOutcome combine_rfe(int r_t, int f, ErrorClass ec) {
  switch (rfe_row(r_t, f, ec)) {
    case 1: return {{0, 0}, false};
    case 2: return {{0, 1}, false};
    case 3: return {{0, 1}, false};
    case 4: return {{1, 0}, false};
    case 5: return {{1, 1}, false};
    case 6: return {{1, 0}, false};
    case 7: return {{1, 1}, false};
    case 8: return {{1, 1}, false};
    case 9: return {{0, 0}, true};
    case 10: return {{0, 1}, true};
    default:
      throw Error(ErrorCode::InvalidCombination, "error class does not match the following bit");
  }
}

AddResult add_positive(const Float& x, const Float& y, Precision p, RoundingMode mode,
                       const Context& ctx) {
  if (x.sign() < 0 || y.sign() < 0) {
    throw Error(ErrorCode::NegativeOperand, "add_positive expects positive operands");
  }
  check_precision(p.bits(), ctx);

  const bool swap = y.exponent() > x.exponent();
  const Float& hi = swap ? y : x;
  const Float& lo = swap ? x : y;
  const Alignment align = Alignment::of(hi, lo);
  const prec_t prec = p.bits();

  ScanStats stats;
  MainTerm mt = compute_main_term(hi, lo, p, align, &stats);

  ErrorClass ec;
  if (!mt.carried || mt.f == mt.displaced) {
    auto [cls, scan] = classify_error(hi, lo, align, mt.f, prec + 3);
    ec = cls;
    scan.merge_reads(stats);
    stats = scan;
  } else {
    // After a carry the pushed-out bit is a trailing bit of weight u/2 in
    // the new scale: it alone settles eps against 0 and u.
    ec = mt.f ? ErrorClass::LtU : ErrorClass::GtZero;
  }

  const int row = rfe_row(mt.r_t, mt.f, ec);
  const RfeOutcome rfe = combine_rfe(mt.r_t, mt.f, ec);

  std::vector<limb_t> mant = std::move(mt.mantissa);
  exp_t e = mt.exponent;
  if (rfe.carry && increment_mantissa(mant, prec)) ++e;
  const RoundDecision dec = decide_round(mode, rfe.rs, bit_at(mant, prec));
  if (dec.action == RoundAction::Increment && increment_mantissa(mant, prec)) ++e;

  if (e > ctx.emax) return Overflow{mode, 1, dec.ternary, e};
  return AddOutcome{Float::from_limbs(1, e, prec, std::move(mant), ctx), dec.ternary, stats, row};
}

}  // namespace xadd
