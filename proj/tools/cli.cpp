#include "cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <fstream>
#include <iostream>

#include "case_generator.hpp"
#include "xadd/oracle.hpp"
#include "xadd/textio.hpp"

namespace xadd::cli {

namespace {

constexpr std::array kModes = {RoundingMode::Down, RoundingMode::Up, RoundingMode::TowardZero,
                               RoundingMode::NearestEven};

}  // namespace

AddResult default_adder(const Float& x, const Float& y, Precision p, RoundingMode mode,
                        const Context& ctx) {
  return add_positive(x, y, p, mode, ctx);
}

int cmd_add(std::string_view x_token, std::string_view y_token, const CliConfig& config,
            std::ostream& out, std::ostream& err) {
  const Context ctx;
  try {
    const Float x = textio::parse_float(x_token, ctx);
    const Float y = textio::parse_float(y_token, ctx);
    const AddResult r = add_positive(x, y, Precision(config.precision), config.mode, ctx);
    out << textio::format_outcome(r) << '\n';
    if (const auto* ok = std::get_if<AddOutcome>(&r)) {
      if (config.stats) {
        out << "# bits_examined=" << ok->stats.trailing_bits_examined
            << " x_limbs_read=" << ok->stats.x_limbs_read
            << " y_limbs_read=" << ok->stats.y_limbs_read << '\n';
      }
      return kOk;
    }
    return kOverflow;
  } catch (const Error& e) {
    err << "xadd: " << e.what() << '\n';
    return kUsage;
  }
}

int cmd_verify(const CliConfig& config, std::ostream& out, std::ostream& err, const Adder& adder) {
  if (config.count < 1) {
    err << "xadd: invalid count " << config.count << " (must be >= 1)\n";
    return kUsage;
  }
  if (config.max_prec < 2) {
    err << "xadd: invalid max-prec " << config.max_prec << " (must be >= 2)\n";
    return kUsage;
  }
  const Context ctx;
  out << "# seed=" << config.seed << " max_prec=" << config.max_prec << '\n';
  tools::CaseGenerator gen(config.seed, config.max_prec, ctx);
  for (std::int64_t i = 0; i < config.count; ++i) {
    const tools::RandomCase c = gen.next();
    const Precision p(c.precision);
    const auto exact = oracle::exact_add(c.x, c.y);
    for (const RoundingMode mode : kModes) {
      const auto want = textio::to_expected(oracle::round_sum(exact, p, mode, ctx));
      const auto got = textio::to_expected(adder(c.x, c.y, p, mode, ctx));
      if (!(got == want)) {
        out << textio::format_fixture_line({c.x, c.y, c.precision, mode, want}) << '\n';
        out << "# got: " << textio::format_outcome(got) << " (case " << i << ")\n";
        return kMismatch;
      }
    }
  }
  out << "PASS n=" << config.count << '\n';
  return kOk;
}

int cmd_check(const std::string& fixture_path, std::ostream& out, std::ostream& err,
              const Adder& adder) {
  std::ifstream in(fixture_path);
  if (!in) {
    err << "xadd: cannot open " << fixture_path << '\n';
    return kUsage;
  }
  const Context ctx;
  std::vector<std::pair<int, textio::FixtureCase>> cases;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    try {
      if (auto c = textio::parse_fixture_line(line, ctx)) cases.emplace_back(lineno, std::move(*c));
    } catch (const Error& e) {
      err << fixture_path << ':' << lineno << ": " << e.what() << '\n';
      return kUsage;
    }
  }

  int mismatches = 0;
  for (const auto& [lineno, c] : cases) {
    const auto got = textio::to_expected(adder(c.x, c.y, Precision(c.precision), c.mode, ctx));
    if (got == c.expected) {
      out << "ok " << lineno << '\n';
    } else {
      ++mismatches;
      out << "MISMATCH " << lineno << ": expected " << textio::format_outcome(c.expected)
          << " got " << textio::format_outcome(got) << '\n';
    }
  }
  if (mismatches > 0) {
    out << "FAIL mismatches=" << mismatches << " n=" << cases.size() << '\n';
    return kMismatch;
  }
  out << "PASS n=" << cases.size() << '\n';
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exactly rounded multiple-precision addition", "xadd"};
  app.require_subcommand(1);

  CliConfig config;
  std::string mode_text = "nearest";
  std::string x_token;
  std::string y_token;
  std::string fixture;

  auto* add = app.add_subcommand("add", "Round x + y to the target precision");
  add->add_option("-p,--prec", config.precision, "Target precision in bits")->required();
  add->add_option("-m,--mode", mode_text, "Rounding mode: down, up, zero, nearest");
  add->add_flag("--stats", config.stats, "Print scan statistics");
  add->add_option("x", x_token, "First operand, e.g. 0.1011e3")->required();
  add->add_option("y", y_token, "Second operand")->required();

  auto* verify = app.add_subcommand("verify", "Differential test against the reference oracle");
  verify->add_option("--seed", config.seed, "PRNG seed");
  verify->add_option("--count", config.count, "Number of random cases");
  verify->add_option("--max-prec", config.max_prec, "Largest random precision");

  auto* check = app.add_subcommand("check", "Replay a fixture file");
  check->add_option("fixture", fixture, "Fixture file path")->required();

  // CLI11 expects argv order reversed when given a vector.
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "xadd: " << e.what() << '\n';
    return kUsage;
  }

  if (add->parsed()) {
    try {
      config.mode = textio::parse_mode(mode_text);
    } catch (const Error& e) {
      err << "xadd: " << e.what() << '\n';
      return kUsage;
    }
    return cmd_add(x_token, y_token, config, out, err);
  }
  if (verify->parsed()) return cmd_verify(config, out, err);
  return cmd_check(fixture, out, err);
}

}  // namespace xadd::cli
