#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "xadd/add.hpp"
#include "xadd/oracle.hpp"
#include "xadd/textio.hpp"

namespace xadd::testing {

inline Float F(std::string_view token) { return textio::parse_float(token); }

inline std::string random_mantissa(std::mt19937_64& rng, prec_t n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (auto& c : s) c = (rng() & 1) ? '1' : '0';
  s.front() = '1';
  return s;
}

inline Float random_float(std::mt19937_64& rng, prec_t n, exp_t e) {
  return make_float(1, e, n, random_mantissa(rng, n));
}

/// Sign of value(a) - value(b) for positive floats.
inline int compare_values(const Float& a, const oracle::ExactSum& b) {
  return oracle::compare(oracle::exact_value(a), b);
}

inline bool same_result(const AddResult& a, const AddResult& b) {
  return textio::to_expected(a) == textio::to_expected(b);
}

inline const AddOutcome& outcome(const AddResult& r) { return std::get<AddOutcome>(r); }

constexpr RoundingMode kAllModes[] = {RoundingMode::Down, RoundingMode::Up,
                                      RoundingMode::TowardZero, RoundingMode::NearestEven};

}  // namespace xadd::testing
