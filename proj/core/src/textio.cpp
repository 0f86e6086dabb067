#include "xadd/textio.hpp"

#include <charconv>
#include <vector>

namespace xadd::textio {

namespace {

[[noreturn]] void syntax_error(std::string_view what, std::string_view token) {
  throw Error(ErrorCode::SyntaxError, std::string(what) + ": '" + std::string(token) + "'");
}

template <typename Int>
Int parse_int(std::string_view s, std::string_view what) {
  Int v{};
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || first == last || ec != std::errc{} || ptr != last) syntax_error(what, s);
  return v;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Float parse_float(std::string_view token, const Context& ctx) {
  if (token.size() < 3 || token.substr(0, 2) != "0.") syntax_error("expected 0.<bits>[e<int>]", token);
  const std::string_view rest = token.substr(2);
  const auto epos = rest.find('e');
  const std::string_view bits = rest.substr(0, epos);
  if (bits.empty() || bits.find_first_not_of("01") != std::string_view::npos) {
    syntax_error("mantissa must be binary digits", token);
  }
  exp_t e = 0;
  if (epos != std::string_view::npos) e = parse_int<exp_t>(rest.substr(epos + 1), "bad exponent");
  if (bits.size() < 2) {
    throw Error(ErrorCode::InvalidPrecision, "at least two mantissa bits are required");
  }
  return make_float(1, e, static_cast<prec_t>(bits.size()), bits, ctx);
}

std::string format_float(const Float& x) {
  std::string out = x.sign() < 0 ? "-0." : "0.";
  out += x.bit_string();
  out += 'e';
  out += std::to_string(x.exponent());
  return out;
}

std::string format_ternary(Ternary t) {
  switch (t) {
    case Ternary::Below: return "-1";
    case Ternary::Exact: return "0";
    case Ternary::Above: return "+1";
  }
  return "0";
}

Ternary parse_ternary(std::string_view token) {
  if (token == "+1" || token == "1") return Ternary::Above;
  if (token == "0") return Ternary::Exact;
  if (token == "-1") return Ternary::Below;
  syntax_error("bad ternary value", token);
}

std::string_view mode_name(RoundingMode mode) {
  switch (mode) {
    case RoundingMode::Down: return "down";
    case RoundingMode::Up: return "up";
    case RoundingMode::TowardZero: return "zero";
    case RoundingMode::NearestEven: return "nearest";
  }
  return "nearest";
}

RoundingMode parse_mode(std::string_view name) {
  if (name == "down") return RoundingMode::Down;
  if (name == "up") return RoundingMode::Up;
  if (name == "zero") return RoundingMode::TowardZero;
  if (name == "nearest") return RoundingMode::NearestEven;
  syntax_error("unknown rounding mode", name);
}

ExpectedOutcome to_expected(const AddResult& r) {
  if (const auto* ov = std::get_if<Overflow>(&r)) return {std::nullopt, ov->ternary};
  const auto& out = std::get<AddOutcome>(r);
  return {out.result, out.ternary};
}

std::string format_outcome(const ExpectedOutcome& o) {
  std::string head = o.value ? format_float(*o.value) : std::string(kOverflowToken);
  return head + " " + format_ternary(o.ternary);
}

std::string format_outcome(const AddResult& r) { return format_outcome(to_expected(r)); }

std::optional<FixtureCase> parse_fixture_line(std::string_view line, const Context& ctx) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  const auto tok = split_ws(line);
  if (tok.empty()) return std::nullopt;
  if (tok.size() != 7 || tok[4] != "->") {
    syntax_error("expected 'x y p mode -> result ternary'", line);
  }
  const auto p = parse_int<prec_t>(tok[2], "bad precision");
  check_precision(p, ctx);
  ExpectedOutcome expected;
  if (tok[5] != kOverflowToken) expected.value = parse_float(tok[5], ctx);
  expected.ternary = parse_ternary(tok[6]);
  if (expected.value && expected.value->precision() != p) {
    syntax_error("recorded result precision differs from p", tok[5]);
  }
  return FixtureCase{parse_float(tok[0], ctx), parse_float(tok[1], ctx), p, parse_mode(tok[3]),
                     std::move(expected)};
}

std::string format_fixture_line(const FixtureCase& c) {
  return format_float(c.x) + " " + format_float(c.y) + " " + std::to_string(c.precision) + " " +
         std::string(mode_name(c.mode)) + " -> " + format_outcome(c.expected);
}

}  // namespace xadd::textio
