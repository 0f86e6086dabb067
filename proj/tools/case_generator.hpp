#pragma once

// Deterministic random operand pairs for differential testing.
//
// Uniform random mantissas almost never reach the rare paths of the addition
// (long carry chains, holes between mantissas, exact ties, exponent
// differences on limb boundaries), so cases are drawn from a mix of shapes
// that target them. The stream depends only on (seed, max_prec, context).

#include <cstdint>
#include <random>
#include <string>

#include "xadd/float.hpp"

namespace xadd::tools {

struct RandomCase {
  Float x;
  Float y;
  prec_t precision;
};

class CaseGenerator {
 public:
  CaseGenerator(std::uint64_t seed, prec_t max_prec, const Context& ctx = {});

  RandomCase next();

  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool chance(unsigned one_in);

  std::string random_bits(prec_t n);

 private:
  prec_t pick_precision();
  exp_t pick_shift(prec_t m, prec_t n, prec_t p);
  std::string pick_x_bits(prec_t m);
  std::string pick_y_bits(const std::string& x_bits, prec_t n, exp_t d);

  std::mt19937_64 rng_;
  prec_t max_prec_;
  Context ctx_;
};

}  // namespace xadd::tools
