#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "xadd/add.hpp"

namespace xadd::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kOverflow = 2, kMismatch = 3 };

struct CliConfig {
  RoundingMode mode = RoundingMode::NearestEven;
  prec_t precision = 53;
  std::uint64_t seed = 1;
  std::int64_t count = 1000;
  prec_t max_prec = 64;
  bool stats = false;
};

/// The addition under test; replaceable so the harness itself can be tested.
using Adder = std::function<AddResult(const Float&, const Float&, Precision, RoundingMode,
                                      const Context&)>;

AddResult default_adder(const Float& x, const Float& y, Precision p, RoundingMode mode,
                        const Context& ctx);

int cmd_add(std::string_view x_token, std::string_view y_token, const CliConfig& config,
            std::ostream& out, std::ostream& err);

int cmd_verify(const CliConfig& config, std::ostream& out, std::ostream& err,
               const Adder& adder = default_adder);

int cmd_check(const std::string& fixture_path, std::ostream& out, std::ostream& err,
              const Adder& adder = default_adder);

/// Parses `xadd add|verify|check ...` and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xadd::cli
