#include "rescoh/cli.hpp"

#include <fstream>
#include <ostream>
#include <regex>

#include <CLI11.hpp>

#include "rescoh/error.hpp"
#include "rescoh/root_spec.hpp"
#include "rescoh/serialize.hpp"

namespace rescoh::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string render(const Json& doc, OutputFormat fmt) { return fmt == OutputFormat::Json ? dump(doc) : flatten_tsv(doc); }

template <class T>
const T& require(const std::optional<T>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  return *v;
}

std::size_t require_rank(const RunConfig& c) {
  const long r = require(c.rank, "--rank");
  if (r < 1) throw UsageError("--rank must be at least 1");
  return static_cast<std::size_t>(r);
}

Rational parse_rational_flag(const std::string& text, const char* flag) {
  static const std::regex pattern(R"(^[+-]?[0-9]+(/[0-9]+)?$)");
  if (!std::regex_match(text, pattern)) throw UsageError(std::string(flag) + " expects a rational like 1 or -3/2, got '" + text + "'");
  const std::string body = text[0] == '+' ? text.substr(1) : text;
  Rational q;
  q.set_str(body, 10);
  if (q.get_den() == 0) throw UsageError(std::string(flag) + " has a zero denominator");
  q.canonicalize();
  return q;
}

struct DatumInput {
  std::size_t rank;
  SignChamber eps;
  Weight alpha0;
  Weight lambda;
};

DatumInput parse_datum_flags(const RunConfig& c) {
  const std::size_t rank = require_rank(c);
  const std::string& chamber = require(c.chamber, "--chamber");
  const std::string& alpha0 = require(c.alpha0, "--alpha0");
  const std::string& lambda = require(c.lambda, "--lambda");
  try {
    SignChamber eps = SignChamber::parse(chamber);
    Weight a0 = parse_root_spec(alpha0, rank);
    Weight lam = parse_integer_list(lambda);
    return {rank, std::move(eps), std::move(a0), std::move(lam)};
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
}

Json input_json(const DatumInput& in) {
  return Json{{"rank", in.rank},
              {"chamber", in.eps.to_string()},
              {"alpha0", format_root(in.alpha0)},
              {"lambda", weight_json(in.lambda)}};
}

CommandResult invalid_datum(const DatumInput& in, const ValidationResult& res, OutputFormat fmt) {
  Json doc{{"valid", false}, {"input", input_json(in)}, {"violations", to_json(res.violations)}};
  std::string msg = "invalid datum:";
  for (const auto& v : res.violations) msg += "\n  " + v.condition + ": " + v.message;
  return {kExitInvalidInput, render(doc, fmt), msg};
}

// Wraps a command so that usage and mathematical errors map to exit codes.
template <class F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    return {kExitUsage, "", e.what()};
  } catch (const InvariantViolation& e) {
    return {kExitVerificationFailure, "", std::string("invariant violation: ") + e.what()};
  } catch (const PrecisionExhausted& e) {
    return {kExitVerificationFailure, "", std::string("precision exhausted: ") + e.what()};
  } catch (const Error& e) {
    return {kExitInvalidInput, "", e.what()};
  }
}

}  // namespace

CommandResult cmd_validate(const RunConfig& config) {
  return guarded([&]() -> CommandResult {
    const DatumInput in = parse_datum_flags(config);
    const ValidationResult res = validate_datum(in.rank, in.eps, in.alpha0, in.lambda);
    if (!res.ok()) return invalid_datum(in, res, config.output_format);
    Json doc{{"valid", true},
             {"hc_datum", to_json(*res.datum)},
             {"parabolic_class", to_string(res.datum->parabolic_class())}};
    return {kExitOk, render(doc, config.output_format), ""};
  });
}

CommandResult cmd_package(const RunConfig& config) {
  return guarded([&]() -> CommandResult {
    const DatumInput in = parse_datum_flags(config);
    const ValidationResult res = validate_datum(in.rank, in.eps, in.alpha0, in.lambda);
    if (!res.ok()) return invalid_datum(in, res, config.output_format);
    return {kExitOk, render(package_document(derive_package(*res.datum)), config.output_format), ""};
  });
}

CommandResult cmd_enumerate(const RunConfig& config) {
  return guarded([&]() -> CommandResult {
    const std::size_t rank = require_rank(config);
    const long bound = require(config.weight_bound, "--weight-bound");
    if (bound < 1) throw UsageError("--weight-bound must be at least 1");
    std::vector<DSPackage> packages;
    for (const auto& d : enumerate_data(rank, bound)) packages.push_back(derive_package(d));
    if (config.output_format == OutputFormat::Tsv) return {kExitOk, enumerate_tsv(packages), ""};
    Json entries = Json::array();
    for (const auto& p : packages) entries.push_back(package_document(p));
    Json doc{{"rank", rank}, {"weight_bound", bound}, {"count", packages.size()}, {"entries", entries}};
    return {kExitOk, dump(doc), ""};
  });
}

CommandResult cmd_sl2_verify(const RunConfig& config) {
  return guarded([&]() -> CommandResult {
    Sl2Options opts;
    opts.a_plus = parse_rational_flag(config.a_plus, "--a-plus");
    opts.a_minus = parse_rational_flag(config.a_minus, "--a-minus");
    if (config.germ_depth < 0 || config.germ_depth > 64) throw UsageError("--germ-depth must lie in [0, 64]");
    opts.depth = static_cast<int>(config.germ_depth);
    const Sl2Report report = verify_baby_theorem(opts);
    Json doc{{"sl2_report", to_json(report, opts)}};
    if (report.ok()) return {kExitOk, render(doc, config.output_format), ""};
    std::string msg = "sl2 verification failed:";
    for (const auto& c : report.checks)
      if (c.status == CheckStatus::Fail) msg += "\n  " + c.name + ": " + (c.error ? *c.error : c.detail);
    return {kExitVerificationFailure, render(doc, config.output_format), msg};
  });
}

CommandResult cmd_lshape(const RunConfig& config) {
  return guarded([&]() -> CommandResult {
    const std::size_t rank = require_rank(config);
    ParabolicClass cls;
    try {
      cls = parse_parabolic_class(require(config.parabolic, "--parabolic"));
    } catch (const ParseError& e) {
      throw UsageError(e.what());
    }
    const LShape shape = l_shape(rank, cls);
    Json doc{{"lshape", to_json(shape)},
             {"hypotheses",
              Json{{"central_character_trivial", config.hypotheses.central_character_trivial},
                   {"temperedness_assumed", config.hypotheses.temperedness_assumed},
                   {"central_value_nonzero", config.hypotheses.central_value_nonzero}}},
             {"pole_certificate", to_json(pole_certificate(shape, config.hypotheses))}};
    return {kExitOk, render(doc, config.output_format), ""};
  });
}

CommandResult dispatch(const RunConfig& config) {
  switch (config.subcommand) {
    case Subcommand::Validate: return cmd_validate(config);
    case Subcommand::Package: return cmd_package(config);
    case Subcommand::Enumerate: return cmd_enumerate(config);
    case Subcommand::Sl2Verify: return cmd_sl2_verify(config);
    case Subcommand::LShape: return cmd_lshape(config);
  }
  return {kExitUsage, "", "no subcommand"};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Exact computations for residual Eisenstein cohomology of Sp(2n)", "rescoh"};
  app.require_subcommand(1);

  std::string format = "json";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--output", config.output_path, "Write the document to this file");
  };
  auto add_datum = [&](CLI::App* sub) {
    sub->add_option("--rank", config.rank, "Rank n of Sp(2n)");
    sub->add_option("--chamber", config.chamber, "Sign chamber, e.g. +-");
    sub->add_option("--alpha0", config.alpha0, "Noncompact simple root, e.g. e1+e2 or 2e2");
    sub->add_option("--lambda", config.lambda, "Harish-Chandra parameter, e.g. 3,-2");
    add_common(sub);
  };

  auto* validate = app.add_subcommand("validate", "Validate a Harish-Chandra datum");
  add_datum(validate);
  auto* package = app.add_subcommand("package", "Derive the full parameter package of a datum");
  add_datum(package);

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate all data up to a weight bound");
  enumerate->add_option("--rank", config.rank, "Rank n of Sp(2n)");
  enumerate->add_option("--weight-bound", config.weight_bound, "Largest allowed |lambda_i|");
  add_common(enumerate);

  auto* sl2 = app.add_subcommand("sl2-verify", "Run the SL_2 vanishing verification");
  sl2->add_option("--a-plus", config.a_plus, "Cochain value on X_+ (rational)");
  sl2->add_option("--a-minus", config.a_minus, "Cochain value on X_- (rational)");
  sl2->add_option("--germ-depth", config.germ_depth, "Truncation depth for germ expansions");
  add_common(sl2);

  auto* lshape = app.add_subcommand("lshape", "L-function shape and pole certificate for P1 or P2");
  lshape->add_option("--rank", config.rank, "Rank n of Sp(2n)");
  lshape->add_option("--parabolic", config.parabolic, "P1 or P2");
  lshape->add_option("--central-character-trivial", config.hypotheses.central_character_trivial,
                     "Hypothesis (true/false, default true)");
  lshape->add_option("--tempered", config.hypotheses.temperedness_assumed, "Hypothesis (true/false, default true)");
  lshape->add_option("--central-value-nonzero", config.hypotheses.central_value_nonzero,
                     "Hypothesis (true/false, default true)");
  add_common(lshape);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  if (validate->parsed()) config.subcommand = Subcommand::Validate;
  else if (package->parsed()) config.subcommand = Subcommand::Package;
  else if (enumerate->parsed()) config.subcommand = Subcommand::Enumerate;
  else if (sl2->parsed()) config.subcommand = Subcommand::Sl2Verify;
  else config.subcommand = Subcommand::LShape;
  config.output_format = format == "tsv" ? OutputFormat::Tsv : OutputFormat::Json;

  const CommandResult result = dispatch(config);
  if (!result.message.empty()) err << result.message << "\n";
  if (!result.body.empty()) {
    if (config.output_path) {
      std::ofstream file(*config.output_path, std::ios::binary);
      if (!file) {
        err << "cannot open " << *config.output_path << " for writing\n";
        return kExitUsage;
      }
      file << result.body;
    } else {
      out << result.body;
    }
  }
  return result.exit_code;
}

}  // namespace rescoh::cli
