// Copyright 2026 The quasipart Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "quasipart/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "quasipart/counting.hpp"
#include "quasipart/error.hpp"
#include "quasipart/quasipoly.hpp"
#include "quasipart/recurrences.hpp"

namespace quasipart::cli {
namespace {

using Json = nlohmann::ordered_json;

// Largest n the asymptote schedule may reach.
constexpr std::int64_t kMaxAsymptoteN = 10'000'000;

enum class Format { kJson, kCsv, kPlain };

struct Settings {
  std::string format = "json";
  unsigned threads = 1;

  Format kind() const {
    if (format == "csv") return Format::kCsv;
    if (format == "plain") return Format::kPlain;
    return Format::kJson;
  }
};

// Result of one subcommand, in whichever shape the format asks for.
struct Output {
  Json input_echo;
  Json result;
  bool exact = true;
  std::vector<std::vector<std::string>> csv;  // first row is the header
  std::string plain;
  int exit_code = kExitOk;
};

Json echo_base(const std::vector<std::int64_t>& parts, const Settings& settings) {
  Json echo;
  echo["parts"] = parts;
  echo["format"] = settings.format;
  echo["threads"] = settings.threads;
  return echo;
}

Json instance_json(const Instance& instance) {
  Json j;
  j["parts"] = instance.parts;
  if (instance.part) j["part"] = *instance.part;
  if (instance.n) j["n"] = *instance.n;
  if (instance.l) j["l"] = *instance.l;
  if (instance.r) j["r"] = *instance.r;
  return j;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

void require_gcd_one(const PartSet& set) {
  if (set.gcd() != 1) {
    throw Error(ErrorKind::kGcdNotOne,
                "gcd" + set.to_string() + " = " + std::to_string(set.gcd()) +
                    " but this command needs gcd 1; use the reduction rule "
                    "p_A(n) = p_{A/g}(n/g) when g | n (0 otherwise) and run on " +
                    set.reduced().to_string());
  }
}

Output do_count(const std::vector<std::int64_t>& raw, std::int64_t n,
                const Settings& settings) {
  const PartSet set = PartSet::make(raw);
  const std::string value = count(set, n).get_str();
  Output o;
  o.input_echo = echo_base(raw, settings);
  o.input_echo["n"] = n;
  o.result = value;
  o.csv = {{"n", "p_A_n"}, {std::to_string(n), value}};
  o.plain = value + "\n";
  return o;
}

Output do_table(const std::vector<std::int64_t>& raw, std::int64_t n_max,
                const Settings& settings) {
  const PartSet set = PartSet::make(raw);
  const std::vector<Count> values = count_table(set, n_max);
  Output o;
  o.input_echo = echo_base(raw, settings);
  o.input_echo["n_max"] = n_max;
  o.result = Json::array();
  o.csv = {{"n", "p_A_n"}};
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::string v = values[i].get_str();
    o.result.push_back(v);
    o.csv.push_back({std::to_string(i), v});
    o.plain += std::to_string(i) + " " + v + "\n";
  }
  return o;
}

Output do_quasipoly(const std::vector<std::int64_t>& raw, int extra,
                    std::optional<int> fit_degree, const Settings& settings) {
  const PartSet set = PartSet::make(raw);
  require_gcd_one(set);
  InterpolationOptions options;
  options.extra_samples = extra;
  options.fit_degree = fit_degree;
  options.threads = settings.threads;
  const QuasiPolynomial q = interpolate_constituents(set, options);
  const std::vector<ConstituentCheck> checks = check_structure(q);
  const std::string expected = exact_string(leading_coefficient_expected(set));

  Output o;
  o.input_echo = echo_base(raw, settings);
  o.input_echo["extra_samples"] = extra;
  if (fit_degree) o.input_echo["fit_degree"] = *fit_degree;

  bool all_match = true;
  Json constituents = Json::array();
  o.csv = {{"residue", "degree", "leading", "expected_leading", "matches",
            "coefficients"}};
  o.plain = "period " + std::to_string(q.period) + "\nexpected leading " + expected + "\n";
  for (std::size_t r = 0; r < q.constituents.size(); ++r) {
    const ConstituentCheck& check = checks[r];
    const bool matches = check.degree_matches && check.leading_matches;
    all_match = all_match && matches;
    std::vector<std::string> coeffs;
    for (const Rational& c : q.constituents[r].coefficients()) {
      coeffs.push_back(exact_string(c));
    }
    if (coeffs.empty()) coeffs.push_back("0");
    Json entry;
    entry["residue"] = r;
    entry["coefficients"] = coeffs;
    entry["degree"] = check.degree;
    entry["leading"] = exact_string(check.leading);
    entry["matches"] = matches;
    constituents.push_back(std::move(entry));
    o.csv.push_back({std::to_string(r), std::to_string(check.degree),
                     exact_string(check.leading), expected,
                     matches ? "true" : "false", join(coeffs, " ")});
    o.plain += "r=" + std::to_string(r) + ": " + join(coeffs, " ") +
               (matches ? "" : "  MISMATCH") + "\n";
  }
  o.result["period"] = std::to_string(q.period);
  o.result["degree"] = static_cast<int>(set.size()) - 1;
  o.result["expected_leading"] = expected;
  o.result["verified_l_range"] = {q.verified_range.first, q.verified_range.last};
  o.result["constituents"] = std::move(constituents);
  o.result["all_match"] = all_match;
  return o;
}

Output do_verify(const std::vector<std::int64_t>& raw, std::int64_t l_max,
                 std::uint64_t seed, std::optional<std::int64_t> sertoz_from,
                 const Settings& settings) {
  const PartSet set = PartSet::make(raw);
  require_gcd_one(set);
  SuiteOptions options;
  options.sertoz_from = sertoz_from;
  const std::vector<IdentityReport> reports = run_identity_suite(set, l_max, seed, options);

  Output o;
  o.input_echo = echo_base(raw, settings);
  o.input_echo["l_max"] = l_max;
  o.input_echo["seed"] = seed;
  if (sertoz_from) o.input_echo["sertoz_from"] = *sertoz_from;

  std::size_t failed = 0;
  std::size_t skipped = 0;
  Json list = Json::array();
  o.csv = {{"identity", "instance", "lhs", "rhs", "holds", "skipped", "note"}};
  for (const IdentityReport& report : reports) {
    if (!report.holds) ++failed;
    if (report.skipped) ++skipped;
    Json entry;
    entry["identity"] = report.identity;
    entry["instance"] = instance_json(report.instance);
    entry["lhs"] = report.lhs.get_str();
    entry["rhs"] = report.rhs.get_str();
    entry["holds"] = report.holds;
    entry["skipped"] = report.skipped;
    if (!report.note.empty()) entry["note"] = report.note;
    list.push_back(std::move(entry));
    o.csv.push_back({report.identity, report.instance.describe(),
                     report.lhs.get_str(), report.rhs.get_str(),
                     report.holds ? "true" : "false",
                     report.skipped ? "true" : "false", report.note});
    const char* status = report.skipped ? "SKIP" : (report.holds ? "ok  " : "FAIL");
    o.plain += std::string(status) + " " + report.identity + " " +
               report.instance.describe() + " lhs=" + report.lhs.get_str() +
               " rhs=" + report.rhs.get_str() +
               (report.note.empty() ? "" : " (" + report.note + ")") + "\n";
  }
  o.plain += std::to_string(reports.size()) + " reports, " + std::to_string(failed) +
             " failed, " + std::to_string(skipped) + " skipped\n";
  o.result["total"] = reports.size();
  o.result["failed"] = failed;
  o.result["skipped"] = skipped;
  o.result["all_hold"] = failed == 0;
  o.result["reports"] = std::move(list);
  o.exit_code = failed == 0 ? kExitOk : kExitIdentityViolation;
  return o;
}

Output do_asymptote(const std::vector<std::int64_t>& raw, int n_points,
                    const Settings& settings) {
  const PartSet set = PartSet::make(raw);
  require_gcd_one(set);
  const std::int64_t period = set.period_at_most(kMaxPeriod);
  if (n_points < 1) {
    throw Error(ErrorKind::kInvalidArgument, "need at least one point");
  }
  std::vector<std::int64_t> ls;
  for (int j = 1; j <= n_points; ++j) {
    const std::int64_t l = std::int64_t{1} << std::min(j, 62);
    if (j > 40 || period > kMaxAsymptoteN / l) {
      throw Error(ErrorKind::kInvalidArgument,
                  "n = " + std::to_string(period) + " * 2^" + std::to_string(j) +
                      " exceeds " + std::to_string(kMaxAsymptoteN));
    }
    ls.push_back(l);
  }
  const std::vector<Rational> scaled = limit_check(set, 0, ls);

  Output o;
  o.exact = false;
  o.input_echo = echo_base(raw, settings);
  o.input_echo["n_points"] = n_points;
  o.result["period"] = std::to_string(period);
  o.result["limit_constant"] = exact_string(limit_constant(set));
  Json points = Json::array();
  o.csv = {{"j", "n", "ratio", "ratio_decimal", "scaled"}};
  for (std::size_t i = 0; i < ls.size(); ++i) {
    const std::int64_t n = period * ls[i];
    const Rational ratio = asymptotic_ratio(set, n);
    Json point;
    point["j"] = i + 1;
    point["n"] = std::to_string(n);
    point["ratio"] = exact_string(ratio);
    point["ratio_decimal"] = decimal_string(ratio, 12);
    point["scaled"] = exact_string(scaled[i]);
    points.push_back(std::move(point));
    o.csv.push_back({std::to_string(i + 1), std::to_string(n), exact_string(ratio),
                     decimal_string(ratio, 12), exact_string(scaled[i])});
    o.plain += std::to_string(n) + " " + exact_string(ratio) + " " +
               decimal_string(ratio, 12) + "\n";
  }
  o.result["points"] = std::move(points);
  return o;
}

void emit(const std::string& command, const Output& o, const Settings& settings,
          std::ostream& out) {
  switch (settings.kind()) {
    case Format::kJson: {
      Json envelope;
      envelope["schema_version"] = kSchemaVersion;
      envelope["command"] = command;
      envelope["input_echo"] = o.input_echo;
      envelope["result"] = o.result;
      envelope["exact"] = o.exact;
      out << envelope.dump(2) << "\n";
      break;
    }
    case Format::kCsv:
      for (const auto& row : o.csv) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i) out << ',';
          out << csv_field(row[i]);
        }
        out << "\r\n";
      }
      break;
    case Format::kPlain:
      out << o.plain;
      break;
  }
}

}  // namespace

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Restricted partition counts p_A(n), their quasi-polynomial "
               "constituents, and exact identity checks.",
               "quasipart"};
  app.require_subcommand(1, 1);

  Settings settings;
  app.add_option("--format", settings.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--threads", settings.threads, "Worker threads (output is identical)")
      ->check(CLI::Range(1u, 256u));

  std::vector<std::int64_t> parts;
  auto add_parts = [&](CLI::App* sub) {
    sub->add_option("-A,--parts", parts, "Comma-separated allowed parts")
        ->required()
        ->delimiter(',');
    sub->fallthrough();
  };

  std::int64_t n = 0;
  auto* count_cmd = app.add_subcommand("count", "p_A(n)");
  add_parts(count_cmd);
  count_cmd->add_option("-n", n, "Argument n")->required();

  std::int64_t n_max = 0;
  auto* table_cmd = app.add_subcommand("table", "p_A(0), ..., p_A(m)");
  add_parts(table_cmd);
  table_cmd->add_option("-m,--n-max", n_max, "Largest n")->required();

  int extra = 3;
  std::optional<int> fit_degree;
  auto* quasi_cmd = app.add_subcommand(
      "quasipoly", "Constituents p_A(T l + r) for T = product of the parts");
  add_parts(quasi_cmd);
  quasi_cmd->add_option("-e,--extra", extra, "Extra samples per residue")
      ->check(CLI::NonNegativeNumber);
  quasi_cmd->add_option("--fit-degree", fit_degree,
                        "Fit this degree instead of k-1 (residual test)")
      ->check(CLI::NonNegativeNumber);

  std::int64_t l_max = 3;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> sertoz_from;
  auto* verify_cmd = app.add_subcommand("verify", "Check every recurrence identity");
  add_parts(verify_cmd);
  verify_cmd->add_option("--l-max", l_max, "Largest l")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", seed, "Seed for random Lemma 1 instances");
  verify_cmd->add_option("--sertoz-from", sertoz_from,
                         "Force the Sertoz-Ozluk run to start here, even below "
                         "its validity bound");

  int n_points = 10;
  auto* asym_cmd = app.add_subcommand(
      "asymptote", "Ratio of p_A(n) to n^(k-1) / (prod(a) (k-1)!) at n = T 2^j");
  add_parts(asym_cmd);
  asym_cmd->add_option("-p,--points", n_points, "Number of points j = 1..p")
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "quasipart: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    std::string command;
    Output o;
    if (*count_cmd) {
      command = "count";
      o = do_count(parts, n, settings);
    } else if (*table_cmd) {
      command = "table";
      o = do_table(parts, n_max, settings);
    } else if (*quasi_cmd) {
      command = "quasipoly";
      o = do_quasipoly(parts, extra, fit_degree, settings);
    } else if (*verify_cmd) {
      command = "verify";
      o = do_verify(parts, l_max, seed, sertoz_from, settings);
    } else {
      command = "asymptote";
      o = do_asymptote(parts, n_points, settings);
    }
    emit(command, o, settings, out);
    if (o.exit_code == kExitIdentityViolation) {
      err << "quasipart: identity violation, see reports\n";
    }
    return o.exit_code;
  } catch (const ResidualNonZeroError& e) {
    err << "quasipart: " << e.what() << "\n";
    return kExitResidual;
  } catch (const std::exception& e) {
    err << "quasipart: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace quasipart::cli
