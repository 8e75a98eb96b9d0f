// Copyright 2026 The cfkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cfkit/bench.hpp"
#include "cfkit/constants.hpp"
#include "cfkit/continued_fraction.hpp"
#include "cfkit/diagnostics.hpp"
#include "cfkit/errors.hpp"
#include "cfkit/expr_parser.hpp"
#include "cfkit/hypergeom.hpp"
#include "cfkit/presets.hpp"
#include "cfkit/spec_io.hpp"
#include "cfkit/transforms.hpp"
#include "json.hpp"

namespace cfkit::cli {

namespace {

using nlohmann::json;

class UsageError : public InputError {
 public:
  using InputError::InputError;
};

// Default bracket precision for verify and compare.
constexpr unsigned kDefaultDigits = 40;
constexpr const char* kDigitsEnv = "CFKIT_DIGITS";

unsigned env_digits() {
  const char* raw = std::getenv(kDigitsEnv);
  if (raw == nullptr || *raw == '\0') return kDefaultDigits;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 1 || v > 100000) {
    throw UsageError(std::string(kDigitsEnv) + " must be a positive integer");
  }
  return static_cast<unsigned>(v);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw UsageError("empty item in list '" + text + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::vector<Rational> parse_head(const std::string& text) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  for (const auto& item : split_list(text)) out.push_back(Rational::parse(item));
  return out;
}

enum class Format { kText, kJson, kCsv };

const std::map<std::string, Format> kTextJson{{"text", Format::kText},
                                               {"json", Format::kJson}};

struct Source {
  std::string preset;
  std::string file;
  std::string a_expr;
  std::string b_expr;
  std::string a_head;
  std::string b_head;
  std::string b0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--preset", preset, "Built-in fraction: " + [] {
      std::string names;
      for (const auto& n : preset_names()) names += (names.empty() ? "" : ", ") + n;
      return names;
    }());
    cmd->add_option("--file", file, "Fraction file (JSON)");
    cmd->add_option("--a-expr", a_expr, "Partial numerators a_n as an expression in n");
    cmd->add_option("--b-expr", b_expr, "Partial denominators b_n as an expression in n");
    cmd->add_option("--a-head", a_head, "Explicit leading a_n values, comma separated");
    cmd->add_option("--b-head", b_head, "Explicit leading b_n values, comma separated");
    cmd->add_option("--b0", b0, "Leading term b0 (default 0)");
  }

  CFSpec load() const {
    const bool exprs = !a_expr.empty() || !b_expr.empty();
    const int given = !preset.empty() + !file.empty() + exprs;
    if (given != 1) {
      throw UsageError("give exactly one of --preset, --file, or --a-expr with --b-expr");
    }
    const bool extras = !a_head.empty() || !b_head.empty() || !b0.empty();
    if (!exprs && extras) {
      throw UsageError("--a-head, --b-head and --b0 only apply to --a-expr/--b-expr");
    }
    if (!preset.empty()) return cfkit::preset(preset);
    if (!file.empty()) return read_spec_file(file);
    if (a_expr.empty() || b_expr.empty()) {
      throw UsageError("--a-expr and --b-expr must be given together");
    }
    CFSpec cf;
    cf.b0 = b0.empty() ? Rational(0) : Rational::parse(b0);
    cf.a = CoefficientSequence(parse_head(a_head), parse_sequence_expr(a_expr));
    cf.b = CoefficientSequence(parse_head(b_head), parse_sequence_expr(b_expr));
    return cf;
  }
};

std::string value_line(const Rational& x, std::optional<unsigned> digits) {
  std::string out = x.str();
  if (digits) out += " \xE2\x89\x88 " + to_decimal(x, *digits);  // U+2248
  return out;
}

// eval

struct EvalArgs {
  Source source;
  long depth = 0;
  std::optional<unsigned> digits;
  bool all = false;
  Format format = Format::kText;
};

void cmd_eval(const EvalArgs& args, std::ostream& out) {
  const CFSpec cf = args.source.load();
  if (!args.all) {
    const Rational v = convergent(cf, args.depth);
    if (args.format == Format::kJson) {
      json j{{"depth", args.depth}, {"value", v.str()}};
      if (args.digits) j["decimal"] = to_decimal(v, *args.digits);
      out << j.dump() << "\n";
    } else {
      out << value_line(v, args.digits) << "\n";
    }
    return;
  }
  const ConvergentTrace trace = convergents(cf, args.depth);
  for (long n = 1; n <= args.depth; ++n) {
    const auto& v = trace.values[static_cast<std::size_t>(n)];
    if (args.format == Format::kJson) {
      json j{{"depth", n}, {"value", v ? json(v->str()) : json(nullptr)}};
      if (v && args.digits) j["decimal"] = to_decimal(*v, *args.digits);
      out << j.dump() << "\n";
    } else {
      out << n << ": " << (v ? value_line(*v, args.digits) : "undefined") << "\n";
    }
  }
  if (!trace.values.back()) throw UndefinedConvergentError(args.depth);
}

// gauss

struct GaussArgs {
  std::string a, b, c, z;
  bool negate = false;
  long max_head = 8;
  std::optional<long> depth;
  std::optional<unsigned> digits;
  std::string emit;
  std::string name;
};

void cmd_gauss(const GaussArgs& args, std::ostream& out) {
  const HypParams p{Rational::parse(args.a), Rational::parse(args.b),
                    Rational::parse(args.c)};
  CFSpec cf = gauss_cf(p, Rational::parse(args.z), args.negate, args.max_head);
  if (!args.name.empty()) cf.name = args.name;
  if (!args.emit.empty()) {
    write_spec_file(args.emit, cf);
    out << "wrote " << args.emit << "\n";
  }
  if (args.depth) {
    out << "convergent " << *args.depth << ": "
        << value_line(convergent(cf, *args.depth), args.digits) << "\n";
  } else if (args.emit.empty()) {
    out << serialize_spec(cf);
  }
}

// transform

struct TransformArgs {
  Source source;
  std::string scale_expr;
  std::string scale_file;
  std::string match_b_expr;
  std::string emit;
  std::string name;
};

void cmd_transform(const TransformArgs& args, std::ostream& out) {
  const int given = !args.scale_expr.empty() + !args.scale_file.empty() +
                    !args.match_b_expr.empty();
  if (given != 1) {
    throw UsageError("give exactly one of --scale-expr, --scale-file or --match-b-expr");
  }
  const CFSpec cf = args.source.load();
  ScalingSequence r;
  if (!args.scale_expr.empty()) {
    r = ScalingSequence::of(parse_sequence_expr(args.scale_expr));
  } else if (!args.scale_file.empty()) {
    std::ifstream in(args.scale_file);
    if (!in) throw InputError("cannot open '" + args.scale_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    r = parse_sequence(buf.str());
  } else {
    r = scaling_to_match_denominators(
        cf, CoefficientSequence::of(parse_sequence_expr(args.match_b_expr)));
  }
  CFSpec result = apply_equivalence(cf, r);
  result.name.reset();
  if (!args.name.empty()) result.name = args.name;

  auto cell = [](const CoefficientSequence& s, long n) {
    try {
      return s.at(n).str();
    } catch (const NumericError&) {
      return std::string("-");
    }
  };
  std::vector<std::vector<std::string>> rows{{"n", "a_n", "b_n", "r_n", "a~_n", "b~_n"}};
  for (long n = 1; n <= 5; ++n) {
    rows.push_back({std::to_string(n), cell(cf.a, n), cell(cf.b, n), cell(r, n),
                    cell(result.a, n), cell(result.b, n)});
  }
  std::vector<std::size_t> width(rows[0].size(), 0);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << row[i];
    }
    out << "\n";
  }
  if (!args.emit.empty()) {
    write_spec_file(args.emit, result);
    out << "wrote " << args.emit << "\n";
  } else {
    out << serialize_spec(result);
  }
}

// diagnose

struct DiagnoseArgs {
  Source source;
  long probe = 100;
  Format format = Format::kText;
};

void cmd_diagnose(const DiagnoseArgs& args, std::ostream& out) {
  const RegimeReport report = classify(args.source.load(), args.probe);
  if (args.format == Format::kJson) {
    json j{{"limit", report.limit.str()},
           {"regime", regime_name(report.regime)},
           {"rho_monotone_from", report.rho_monotone_from
                                     ? json(*report.rho_monotone_from)
                                     : json(nullptr)},
           {"abs_b_sum_diverges", report.abs_b_sum_diverges}};
    out << j.dump() << "\n";
    return;
  }
  const std::string limit = report.limit.kind == RatioLimit::Kind::kInfinite
                                ? "\xE2\x88\x9E"  // U+221E
                                : report.limit.str();
  out << "limit " << limit << ", " << regime_name(report.regime) << ", ";
  if (report.rho_monotone_from) {
    out << "rho decreasing from n=" << *report.rho_monotone_from;
  } else {
    out << "rho not decreasing up to n=" << args.probe;
  }
  out << ", sum|b| " << (report.abs_b_sum_diverges ? "diverges" : "converges") << "\n";
}

// verify

struct VerifyArgs {
  Source source;
  std::string target;
  std::optional<unsigned> digits;
  long max_depth = 200;
  Format format = Format::kText;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  const CFSpec cf = args.source.load();
  const ConstantExpr target = parse_constant_expr(args.target);
  const unsigned requested = args.digits ? *args.digits : env_digits();
  // Ten guard digits; the certified error bound stays valid even when a
  // convergent falls inside the bracket.
  const ConstantBracket bracket = const_bracket(target, requested + 10);
  const ConvergentTrace trace = convergents(cf, args.max_depth);

  std::size_t achieved = 0;
  long depth_used = args.max_depth;
  bool verified = false;
  for (long n = 1; n <= args.max_depth; ++n) {
    const auto& v = trace.values[static_cast<std::size_t>(n)];
    if (!v) {
      achieved = 0;
      continue;
    }
    achieved = decimals_for_error(bracket.max_distance(*v));
    if (achieved >= requested) {
      verified = true;
      depth_used = n;
      break;
    }
  }
  const std::string achieved_str =
      achieved == kExactDecimals ? "exact" : std::to_string(achieved);
  if (args.format == Format::kJson) {
    json j{{"verified", verified},
           {"achieved_decimals", achieved == kExactDecimals ? json("exact") : json(achieved)},
           {"requested_decimals", requested},
           {"depth_used", depth_used}};
    out << j.dump() << "\n";
  } else {
    out << (verified ? "verified" : "not verified") << ": " << achieved_str
        << " correct decimals of " << target.str() << " at depth " << depth_used
        << " (requested " << requested << ")\n";
  }
  return verified ? kOk : kUnverified;
}

// compare

struct CompareArgs {
  std::string depths = "5,15,25";
  std::optional<unsigned> digits;
  std::string preset = "conjecture-pi4";
  std::string target = "-pi/4";
  Format format = Format::kText;
  bool exact = false;
  bool timing = false;
};

void cmd_compare(const CompareArgs& args, std::ostream& out) {
  std::vector<long> depths;
  for (const auto& item : split_list(args.depths)) {
    std::size_t used = 0;
    long d = 0;
    try {
      d = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || d < 1) throw UsageError("bad depth '" + item + "'");
    depths.push_back(d);
  }
  const unsigned digits = args.digits ? *args.digits : env_digits();
  const auto rows = compare_table(preset(args.preset), parse_constant_expr(args.target),
                                  depths, digits, {args.timing});
  if (args.format == Format::kJson) {
    for (const auto& r : rows) {
      json j{{"n", r.n},
             {"series_error", r.series_error.str()},
             {"cf_error", r.cf_error.str()},
             {"error_ratio", r.error_ratio ? json(r.error_ratio->str()) : json(nullptr)},
             {"cf_decimals",
              r.cf_decimals == kExactDecimals ? json("exact") : json(r.cf_decimals)}};
      if (r.cf_millis) j["cf_ms"] = *r.cf_millis;
      out << j.dump() << "\n";
    }
    return;
  }
  out << render_report(rows, args.format == Format::kCsv ? ReportFormat::kCsv
                                                         : ReportFormat::kText,
                       args.exact);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact continued-fraction toolkit: evaluate, transform, diagnose, verify"};
  app.name("cfkit");
  app.require_subcommand(1);

  const CLI::Validator positive(
      [](std::string& v) {
        return v.empty() || v[0] == '-' || v.find_first_not_of("0") == std::string::npos
                   ? std::string("must be a positive integer")
                   : std::string();
      },
      "POSITIVE");

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate the convergent f_N (contains a_1..a_N)");
  eval.source.attach(eval_cmd);
  eval_cmd->add_option("--depth", eval.depth, "Depth N of the convergent f_N")
      ->required()
      ->check(positive);
  eval_cmd->add_option("--digits", eval.digits, "Also print a truncated decimal");
  eval_cmd->add_flag("--all,--show-all", eval.all, "Print every convergent f_1..f_N");
  eval_cmd->add_option("--format", eval.format)->transform(CLI::CheckedTransformer(kTextJson));

  GaussArgs gauss;
  auto* gauss_cmd =
      app.add_subcommand("gauss", "Build the Gauss fraction for 2F1(a,b+1;c+1;z)/2F1(a,b;c;z)");
  gauss_cmd->add_option("--a", gauss.a, "Parameter a (rational)")->required();
  gauss_cmd->add_option("--b", gauss.b, "Parameter b (rational)")->required();
  gauss_cmd->add_option("--c", gauss.c, "Parameter c (rational, not 0, -1, -2, ...)")->required();
  gauss_cmd->add_option("--z", gauss.z, "Argument z (rational, nonzero)")->required();
  gauss_cmd->add_flag("--negate", gauss.negate, "Expand the negated ratio");
  gauss_cmd->add_option("--max-head", gauss.max_head, "Terms checked explicitly for poles")
      ->capture_default_str()
      ->check(positive);
  gauss_cmd->add_option("--depth", gauss.depth, "Evaluate f_N")->check(positive);
  gauss_cmd->add_option("--digits", gauss.digits, "Also print a truncated decimal");
  gauss_cmd->add_option("--emit", gauss.emit, "Write the fraction file to this path");
  gauss_cmd->add_option("--name", gauss.name, "Label stored in the emitted spec");

  TransformArgs transform;
  auto* transform_cmd =
      app.add_subcommand("transform", "Apply an equivalence transformation");
  transform.source.attach(transform_cmd);
  transform_cmd->add_option("--scale-expr", transform.scale_expr, "Scaling r_n in n");
  transform_cmd->add_option("--scale-file", transform.scale_file,
                            "Scaling r_n as a JSON sequence object");
  transform_cmd->add_option("--match-b-expr", transform.match_b_expr,
                            "Choose r_n = target_b(n) / b_n");
  transform_cmd->add_option("--emit", transform.emit, "Write the transformed fraction file here");
  transform_cmd->add_option("--name", transform.name, "Label stored in the emitted spec");

  DiagnoseArgs diagnose;
  auto* diagnose_cmd = app.add_subcommand("diagnose", "Ratio-test convergence diagnostics");
  diagnose.source.attach(diagnose_cmd);
  diagnose_cmd->add_option("--probe", diagnose.probe, "Last index probed for monotone rho")
      ->capture_default_str()
      ->check(CLI::Range(2L, 1000000L));
  diagnose_cmd->add_option("--format", diagnose.format)
      ->transform(CLI::CheckedTransformer(kTextJson));

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check that the fraction reaches a target");
  verify.source.attach(verify_cmd);
  verify_cmd->add_option("--target", verify.target, "Target constant, e.g. \"-pi/4\"")
      ->required();
  verify_cmd
      ->add_option("--digits", verify.digits,
                   std::string("Required correct decimals (default $") + kDigitsEnv + " or 40)")
      ->check(positive);
  verify_cmd->add_option("--max-depth", verify.max_depth, "Deepest convergent tried")
      ->capture_default_str()
      ->check(positive);
  verify_cmd->add_option("--format", verify.format)->transform(CLI::CheckedTransformer(kTextJson));

  CompareArgs compare;
  auto* compare_cmd =
      app.add_subcommand("compare", "Leibniz series versus continued fraction error table");
  compare_cmd->add_option("--depths", compare.depths, "Comma-separated depths")
      ->capture_default_str();
  compare_cmd
      ->add_option("--digits", compare.digits,
                   std::string("Reference bracket digits (default $") + kDigitsEnv + " or 40)")
      ->check(positive);
  compare_cmd->add_option("--preset", compare.preset, "Fraction compared with the series")
      ->capture_default_str();
  compare_cmd->add_option("--target", compare.target, "Limit of the fraction")
      ->capture_default_str();
  compare_cmd->add_option("--format", compare.format)
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{
          {"text", Format::kText}, {"csv", Format::kCsv}, {"json", Format::kJson}}));
  compare_cmd->add_flag("--exact", compare.exact, "Print exact p/q values");
  compare_cmd->add_flag("--timing", compare.timing, "Add a wall-time column");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "run with --help for usage\n";
    return kUsage;
  }

  try {
    if (eval_cmd->parsed()) cmd_eval(eval, out);
    if (gauss_cmd->parsed()) cmd_gauss(gauss, out);
    if (transform_cmd->parsed()) cmd_transform(transform, out);
    if (diagnose_cmd->parsed()) cmd_diagnose(diagnose, out);
    if (verify_cmd->parsed()) return cmd_verify(verify, out);
    if (compare_cmd->parsed()) cmd_compare(compare, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    err << "run with --help for usage\n";
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << "\n";
    return kNumeric;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}

}  // namespace cfkit::cli
