#include "case_generator.hpp"

#include <algorithm>
#include <utility>

namespace xadd::tools {

CaseGenerator::CaseGenerator(std::uint64_t seed, prec_t max_prec, const Context& ctx)
    : rng_(seed), max_prec_(std::max<prec_t>(2, max_prec)), ctx_(ctx) {}

std::int64_t CaseGenerator::uniform(std::int64_t lo, std::int64_t hi) {
  // Multiply-shift reduction; unlike std::uniform_int_distribution the
  // sequence is the same on every standard library.
  const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t r = rng_();
  if (range == 0) return static_cast<std::int64_t>(r);
  const auto scaled = static_cast<unsigned __int128>(r) * range;
  return lo + static_cast<std::int64_t>(scaled >> 64);
}

bool CaseGenerator::chance(unsigned one_in) { return uniform(1, one_in) == 1; }

std::string CaseGenerator::random_bits(prec_t n) {
  std::string s(static_cast<std::size_t>(n), '0');
  std::uint64_t pool = 0;
  int left = 0;
  for (auto& c : s) {
    if (left == 0) {
      pool = rng_();
      left = 64;
    }
    c = (pool & 1) ? '1' : '0';
    pool >>= 1;
    --left;
  }
  s.front() = '1';
  return s;
}

prec_t CaseGenerator::pick_precision() {
  const auto clamp = [&](prec_t p) { return std::clamp<prec_t>(p, 2, max_prec_); };
  switch (uniform(0, 9)) {
    case 0: case 1: case 2:
      return clamp(uniform(2, 8));
    case 3: case 4: case 5:
      return clamp(uniform(1, 4) * kLimbBits + uniform(-2, 2));
    default:
      return uniform(2, max_prec_);
  }
}

exp_t CaseGenerator::pick_shift(prec_t m, prec_t n, prec_t p) {
  constexpr exp_t w = kLimbBits;
  switch (uniform(0, 9)) {
    case 0: return 0;
    case 1: return uniform(1, 4);
    case 2: return w + uniform(-1, 1);
    case 3: return 2 * w + uniform(-1, 1);
    case 4: return p + uniform(-1, 3);
    case 5: return std::max<exp_t>(0, m + uniform(-1, 2));
    case 6: return m + uniform(3, 3 * w);
    case 7: return uniform(0, m + n + 8);
    case 8: return chance(4) ? uniform(1'000'000, 2'000'000) : uniform(m + n, m + n + 4 * w);
    default: return uniform(0, std::max<exp_t>(p + 4, 2 * w + 2));
  }
}

std::string CaseGenerator::pick_x_bits(prec_t m) {
  std::string s = random_bits(m);
  const auto um = static_cast<std::size_t>(m);
  switch (uniform(0, 19)) {
    case 0: case 1: case 2:  // all ones
      std::fill(s.begin(), s.end(), '1');
      break;
    case 3: case 4:  // power of two
      std::fill(s.begin() + 1, s.end(), '0');
      break;
    case 5: case 6: case 7:  // random head, zero tail
      std::fill(s.begin() + static_cast<std::ptrdiff_t>(uniform(1, m)), s.end(), '0');
      break;
    case 8: case 9:  // random head, ones tail
      std::fill(s.begin() + static_cast<std::ptrdiff_t>(uniform(1, m)), s.end(), '1');
      break;
    case 10:  // 10...01
      std::fill(s.begin() + 1, s.end(), '0');
      s[um - 1] = '1';
      break;
    default:
      break;
  }
  return s;
}

std::string CaseGenerator::pick_y_bits(const std::string& x_bits, prec_t n, exp_t d) {
  const auto m = static_cast<exp_t>(x_bits.size());
  auto x_at = [&](exp_t pos) { return pos >= 1 && pos <= m ? x_bits[static_cast<std::size_t>(pos - 1)] : '0'; };

  std::string s = random_bits(n);
  switch (uniform(0, 9)) {
    case 0:
      std::fill(s.begin(), s.end(), '1');
      break;
    case 1: case 2: case 3: {
      // Complement of the aligned x bits: every overlapping position sums
      // to 1, giving maximal carry-propagation chains.
      for (exp_t j = 2; j <= n; ++j) s[static_cast<std::size_t>(j - 1)] = x_at(j + d) == '1' ? '0' : '1';
      switch (uniform(0, 3)) {
        case 0:  // end on a position where both bits are equal
          s.back() = x_at(n + d);
          break;
        case 1:  // zero tail
          std::fill(s.begin() + static_cast<std::ptrdiff_t>(uniform(1, n)), s.end(), '0');
          break;
        default:
          break;
      }
      break;
    }
    case 4:  // same bits as aligned x
      for (exp_t j = 2; j <= n; ++j) s[static_cast<std::size_t>(j - 1)] = x_at(j + d);
      break;
    case 5:
      std::fill(s.begin() + 1, s.end(), '0');
      break;
    case 6:
      std::fill(s.begin() + static_cast<std::ptrdiff_t>(uniform(1, n)), s.end(), '0');
      break;
    default:
      break;
  }
  s.front() = '1';
  return s;
}

RandomCase CaseGenerator::next() {
  const prec_t m = pick_precision();
  const prec_t n = pick_precision();
  const prec_t p = pick_precision();

  exp_t ex = uniform(-64, 64);
  if (chance(50)) ex = ctx_.emax - uniform(0, 1);
  exp_t d = pick_shift(m, n, p);
  d = std::min(d, ex - ctx_.emin);

  const std::string xb = pick_x_bits(m);
  const std::string yb = pick_y_bits(xb, n, d);
  Float x = make_float(1, ex, m, xb, ctx_);
  Float y = make_float(1, ex - d, n, yb, ctx_);
  if (chance(2)) std::swap(x, y);
  return {std::move(x), std::move(y), p};
}

}  // namespace xadd::tools
