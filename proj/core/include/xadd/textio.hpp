#pragma once

// Text forms used on the command line and in fixture files.
//
//   float   := "0." bit+ ("e" int)?      first bit is 1, precision = digit count
//   outcome := float ternary | "overflow(+)" ternary
//   ternary := "+1" | "0" | "-1"
//   fixture line := x y p mode "->" outcome      ('#' starts a comment)

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "xadd/add.hpp"
#include "xadd/float.hpp"

namespace xadd::textio {

Float parse_float(std::string_view token, const Context& ctx = {});
std::string format_float(const Float& x);

std::string format_ternary(Ternary t);
Ternary parse_ternary(std::string_view token);

std::string_view mode_name(RoundingMode mode);
RoundingMode parse_mode(std::string_view name);

inline constexpr std::string_view kOverflowToken = "overflow(+)";

/// Result part of an outcome line; an empty value means overflow.
struct ExpectedOutcome {
  std::optional<Float> value;
  Ternary ternary = Ternary::Exact;
  bool operator==(const ExpectedOutcome&) const = default;
};

ExpectedOutcome to_expected(const AddResult& r);
std::string format_outcome(const ExpectedOutcome& o);
std::string format_outcome(const AddResult& r);

struct FixtureCase {
  Float x;
  Float y;
  prec_t precision;
  RoundingMode mode;
  ExpectedOutcome expected;
};

/// Parses one fixture line. Returns nullopt for blank and comment-only lines;
/// throws Error(SyntaxError) when the line does not follow the format.
std::optional<FixtureCase> parse_fixture_line(std::string_view line, const Context& ctx = {});
std::string format_fixture_line(const FixtureCase& c);

}  // namespace xadd::textio
