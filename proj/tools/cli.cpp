#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "document.hpp"
#include "padiccf/counterexample.hpp"

namespace padiccf::cli {
namespace {

using json = nlohmann::ordered_json;

// Bad user input; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    parts.push_back(item);
  }
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

Prime make_prime(long value) {
  if (value < 3) throw UsageError("p = " + std::to_string(value) + " is not an odd prime");
  try {
    return Prime(static_cast<unsigned long>(value));
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

enum class Format { table, json };

void write_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

// ---- expand -------------------------------------------------------------

struct ExpandOptions {
  long p = 0;
  std::string algorithm;
  std::string rational;
  std::string quad;
  std::size_t max_steps = kDefaultMaxSteps;
  std::string branch = "plus";
  Format format = Format::table;
};

int run_expand(const ExpandOptions& o, std::ostream& out) {
  const Prime p = make_prime(o.p);
  Scheme scheme(SchemeTag::browkin1);
  try {
    scheme = Scheme::parse(o.algorithm);
    scheme.require_prime(p);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (o.rational.empty() == o.quad.empty()) {
    throw UsageError("give exactly one of --rational or --quad");
  }
  if (o.max_steps == 0) throw UsageError("--max-steps must be positive");

  std::optional<QuadIrr> input;
  try {
    if (!o.rational.empty()) {
      input = QuadIrr::from_rational(Rational::parse(o.rational), p);
    } else {
      const auto parts = split(o.quad, ',');
      if (parts.size() != 4) throw UsageError("--quad expects P,Q,D,R");
      BigInt Q = parse_bigint(parts[1]);
      if (o.branch == "minus") Q = -Q;
      input = QuadIrr::make(parse_bigint(parts[0]), Q, parse_bigint(parts[2]), parse_bigint(parts[3]), p);
    }
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (input->is_zero()) throw UsageError("cannot expand zero");

  const ExpansionTrace trace = expand(*input, scheme, o.max_steps);
  if (o.format == Format::json) {
    write_json(out, trace_to_json(trace));
  } else {
    write_trace_table(out, trace);
  }
  return trace.status.kind == ExpansionKind::truncated ? kTruncated : kOk;
}

// ---- check --------------------------------------------------------------

struct CheckOptions {
  std::string condition;
  long r = 0;
  std::string trace_file;
  std::string quotients;
  long p = 0;
  Format format = Format::json;
};

PQSequence load_sequence(const CheckOptions& o) {
  if (o.trace_file.empty() == o.quotients.empty()) {
    throw UsageError("give exactly one of --trace or --b");
  }
  if (!o.trace_file.empty()) {
    std::ifstream in(o.trace_file);
    if (!in) throw UsageError("cannot open " + o.trace_file);
    try {
      const ExpansionTrace trace = trace_from_json(json::parse(in));
      return PQSequence(trace.p(), trace.partial_quotients());
    } catch (const json::exception& e) {
      throw UsageError(std::string("malformed trace: ") + e.what());
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  if (o.p == 0) throw UsageError("--b needs --p");
  const Prime p = make_prime(o.p);
  std::vector<Rational> b;
  try {
    for (const auto& part : split(o.quotients, ',')) b.push_back(Rational::parse(part));
    return PQSequence(p, std::move(b));
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

json block_report_json(const BlockReport& r) {
  return {{"r", r.r},
          {"holds", r.holds()},
          {"hypotheses_hold", r.hypotheses_hold},
          {"pattern_holds", r.pattern_holds},
          {"side_conditions_hold", r.side_conditions_hold},
          {"first_violation_index", optional_to_json(r.first_violation_index)},
          {"first_violation_block", optional_to_json(r.first_violation_block)},
          {"violation", r.violation},
          {"complete_blocks", r.complete_blocks},
          {"ignored_tail", r.ignored_tail},
          {"conclusion_holds", r.conclusion_holds},
          {"conclusion_blocks_checked", r.conclusion_blocks_checked},
          {"first_conclusion_failure_block", optional_to_json(r.first_conclusion_failure_block)},
          {"divergent_profile_holds", r.divergent_profile_holds}};
}

int run_check(const CheckOptions& o, std::ostream& out) {
  static const std::vector<std::string> conditions{"pair", "threestep", "rstep", "seqden"};
  if (std::find(conditions.begin(), conditions.end(), o.condition) == conditions.end()) {
    throw UsageError("unknown condition '" + o.condition + "'");
  }
  if (o.condition == "rstep" && o.r < 1) throw UsageError("rstep needs --r >= 1");
  const PQSequence seq = load_sequence(o);

  json report{{"schema_version", kSchemaVersion},
              {"condition", o.condition},
              {"p", seq.p().value()},
              {"length", seq.size()}};
  bool holds = false;
  if (o.condition == "pair") {
    const auto r = check_pair_condition(seq);
    holds = r.holds;
    report["first_violation"] = optional_to_json(r.first_violation);
  } else if (o.condition == "threestep") {
    const auto r = check_3step_hypotheses(seq);
    holds = r.holds();
    report.update(block_report_json(r));
  } else if (o.condition == "rstep") {
    const auto r = check_rstep_hypotheses(seq, o.r);
    holds = r.holds();
    report.update(block_report_json(r));
    if (o.r == 3) {
      const auto three = check_3step_hypotheses(seq);
      report["agrees_with_threestep"] =
          three.hypotheses_hold == r.hypotheses_hold && three.conclusion_holds == r.conclusion_holds;
    }
  } else {
    std::size_t checked = 0;
    json first_failure = nullptr;
    for (std::size_t k = 0; k + 2 < seq.size(); ++k) {
      for (std::size_t n = 2; k + n < seq.size(); ++n) {
        ++checked;
        if (!verify_seqden(seq, k, n) && first_failure.is_null()) first_failure = {{"k", k}, {"n", n}};
      }
    }
    holds = first_failure.is_null();
    report["identities_checked"] = checked;
    report["first_failure"] = first_failure;
  }
  report["holds"] = holds;

  if (o.format == Format::json) {
    write_json(out, report);
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [key, value] : report.items()) {
      rows.push_back({key, value.is_string() ? value.get<std::string>() : value.dump()});
    }
    write_table(out, {"field", "value"}, rows);
  }
  return holds ? kOk : kViolated;
}

// ---- counterexample ------------------------------------------------------

struct CounterexampleOptions {
  long p = 0;
  long blocks = 0;
  Format format = Format::json;
};

int run_counterexample(const CounterexampleOptions& o, std::ostream& out) {
  const Prime p = make_prime(o.p);
  if (o.blocks < 1) throw UsageError("--blocks must be at least 1");
  const PQSequence seq = build_counterexample(p, static_cast<std::size_t>(o.blocks));
  const auto conv = convergents(seq);
  const ValuationTrace vt = valuation_trace(seq);
  const BlockReport three = check_3step_hypotheses(seq);
  const long min_vB = *std::min_element(vt.vB.begin(), vt.vB.end());
  constexpr long kBound = -1;

  json steps = json::array();
  std::vector<std::vector<std::string>> rows;
  for (std::size_t n = 0; n < seq.size(); ++n) {
    const std::optional<long> vb =
        seq[n].is_zero() ? std::nullopt : std::optional<long>(valuation(seq[n], p));
    steps.push_back({{"n", n},
                     {"b", seq[n].str()},
                     {"vp_b", optional_to_json(vb)},
                     {"A", conv[n].A.str()},
                     {"B", conv[n].B.str()},
                     {"vp_B", vt.vB[n]}});
    rows.push_back({std::to_string(n), seq[n].str(), optional_to_string(vb), conv[n].A.str(),
                    conv[n].B.str(), std::to_string(vt.vB[n])});
  }
  json doc{{"schema_version", kSchemaVersion},
           {"kind", "counterexample"},
           {"p", p.value()},
           {"blocks", o.blocks},
           {"pattern_holds", three.pattern_holds},
           {"side_condition_holds", three.side_conditions_hold},
           {"pair_condition_holds", check_pair_condition(seq).holds},
           {"min_vp_B", min_vB},
           {"certified_bound", kBound},
           {"bounded", certify_bounded(seq, kBound)},
           {"steps", std::move(steps)}};

  if (o.format == Format::json) {
    write_json(out, doc);
  } else {
    for (const char* key : {"p", "blocks", "pattern_holds", "side_condition_holds", "pair_condition_holds",
                            "min_vp_B", "certified_bound", "bounded"}) {
      out << key << ": " << doc[key].dump() << '\n';
    }
    write_table(out, {"n", "b", "vp_b", "A", "B", "vp_B"}, rows);
  }
  return kOk;
}

// ---- sqrt ----------------------------------------------------------------

struct SqrtOptions {
  long p = 0;
  std::string d;
  long precision = 0;
  Format format = Format::table;
};

int run_sqrt(const SqrtOptions& o, std::ostream& out, std::ostream& err) {
  const Prime p = make_prime(o.p);
  if (o.precision < 1) throw UsageError("--precision must be at least 1");
  BigInt D;
  try {
    D = parse_bigint(o.d);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (D == 0) throw UsageError("--d must be nonzero");

  BigInt unit;
  const BigInt prime = p.big();
  const unsigned long v = mpz_remove(unit.get_mpz_t(), D.get_mpz_t(), prime.get_mpz_t());
  if (v % 2 != 0 || mpz_kronecker(unit.get_mpz_t(), prime.get_mpz_t()) != 1) {
    err << "error: no square root in Q_" << p.value() << " for D = " << to_string(D) << '\n';
    return kViolated;
  }
  const auto precision = static_cast<unsigned long>(o.precision);
  const BigInt root = hensel_sqrt(unit, p, precision);
  DigitWindow window = unit_digits(root, BigInt(1), p, static_cast<long>(v / 2), precision);

  if (o.format == Format::json) {
    write_json(out, {{"p", p.value()},
                     {"d", to_string(D)},
                     {"start", window.start},
                     {"digits", window.digits},
                     {"residue", to_string(root)}});
  } else {
    out << "start=" << window.start << " digits=[";
    for (std::size_t i = 0; i < window.digits.size(); ++i) {
      out << (i ? ", " : "") << window.digits[i];
    }
    out << "] residue=" << to_string(root) << '\n';
  }
  return kOk;
}

void add_format(CLI::App* cmd, Format& format) {
  cmd->add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"table", Format::table}, {"json", Format::json}}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact p-adic continued fractions: expansion, convergence checks, counterexamples"};
  app.name("padiccf");
  app.require_subcommand(1);

  ExpandOptions expand_opts;
  auto* expand_cmd = app.add_subcommand("expand", "Expand a rational or quadratic irrational");
  expand_cmd->add_option("--p", expand_opts.p, "Odd prime")->required();
  expand_cmd->add_option("--alg", expand_opts.algorithm, "browkin1|browkin2|new1|new2|ruban")->required();
  expand_cmd->add_option("--rational", expand_opts.rational, "Input fraction a/b");
  expand_cmd->add_option("--quad", expand_opts.quad, "Input (P + Q sqrt D)/R as P,Q,D,R");
  expand_cmd->add_option("--max-steps", expand_opts.max_steps, "Step budget")->capture_default_str();
  expand_cmd->add_option("--branch", expand_opts.branch, "Square-root branch (plus = canonical)")
      ->check(CLI::IsMember({"plus", "minus"}));
  add_format(expand_cmd, expand_opts.format);

  CheckOptions check_opts;
  auto* check_cmd = app.add_subcommand("check", "Check a convergence condition on partial quotients");
  check_cmd->add_option("--condition", check_opts.condition, "pair|threestep|rstep|seqden")->required();
  check_cmd->add_option("--r", check_opts.r, "Block length for rstep");
  check_cmd->add_option("--trace", check_opts.trace_file, "Trace document (JSON)");
  check_cmd->add_option("--b", check_opts.quotients, "Comma-separated quotients b0,b1,...");
  check_cmd->add_option("--p", check_opts.p, "Odd prime (with --b)");
  add_format(check_cmd, check_opts.format);

  CounterexampleOptions ce_opts;
  auto* ce_cmd = app.add_subcommand("counterexample", "Build the bounded-denominator counterexample");
  ce_cmd->add_option("--p", ce_opts.p, "Odd prime")->required();
  ce_cmd->add_option("--blocks", ce_opts.blocks, "Number of blocks")->required();
  add_format(ce_cmd, ce_opts.format);

  SqrtOptions sqrt_opts;
  auto* sqrt_cmd = app.add_subcommand("sqrt", "Balanced digits of the canonical sqrt(D) in Q_p");
  sqrt_cmd->add_option("--p", sqrt_opts.p, "Odd prime")->required();
  sqrt_cmd->add_option("--d", sqrt_opts.d, "Integer D")->required();
  sqrt_cmd->add_option("--precision", sqrt_opts.precision, "Number of digits")->required();
  add_format(sqrt_cmd, sqrt_opts.format);

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
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  try {
    if (*expand_cmd) return run_expand(expand_opts, out);
    if (*check_cmd) return run_check(check_opts, out);
    if (*ce_cmd) return run_counterexample(ce_opts, out);
    return run_sqrt(sqrt_opts, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
}

}  // namespace padiccf::cli
