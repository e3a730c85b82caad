#include "ptk/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

#include "ptk/formula.hpp"
#include "ptk/json.hpp"
#include "ptk/oracle.hpp"
#include "ptk/planarity.hpp"
#include "ptk/selftest.hpp"
#include "ptk/witness.hpp"

namespace ptk::cli {

using nlohmann::json;

namespace {

void print_trace(std::ostream& out, const ThicknessResult& r) {
  out << "branch: " << to_string(r.trace.branch) << '\n';
  switch (r.trace.branch) {
    case Branch::EmptyGraph:
      break;
    case Branch::CaseA:
      out << "t: " << r.trace.t << '\n';
      break;
    case Branch::CaseBPart2:
      out << "epsilon: " << r.trace.epsilon << '\n';
      [[fallthrough]];
    case Branch::CaseBPart1:
      out << "N args: (" << r.trace.n_args.first << ", "
          << r.trace.n_args.second << ")\n";
      out << "sigma: ";
      if (r.trace.sigma_used) {
        out << *r.trace.sigma_used;
      } else {
        out << "-";
      }
      out << '\n';
      break;
  }
}

std::string display(const PartProfile& p) {
  return p.empty() ? std::string("(empty)") : to_string(p);
}

std::string row_text(std::span<const Count> counts) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < counts.size(); ++i) {
    os << (i ? "," : "") << counts[i];
  }
  os << ']';
  return os.str();
}

void print_classes(std::ostream& out, const PartProfile& profile,
                   const Partition& w) {
  for (const auto& c : w.classes) {
    const auto induced = induced_profile(profile, c);
    out << "  " << row_text(c.taken()) << "  K_{" << to_string(induced)
        << "}" << (classify_planar(induced) ? "" : "  NON-PLANAR") << '\n';
  }
}

Count parse_count(std::string_view text, std::size_t offset,
                  std::string_view whole) {
  Count v = -1;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v < 0) {
    throw ParseError(std::string(whole), offset,
                     "expected a non-negative integer");
  }
  return v;
}

PartProfile with_part_incremented(const PartProfile& p, std::size_t i) {
  std::vector<Count> parts(p.parts().begin(), p.parts().end());
  ++parts[i];
  return PartProfile(std::move(parts));
}

}  // namespace

Range parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const Count v = parse_count(text, 0, text);
    return {v, v};
  }
  const Count lo = parse_count(text.substr(0, dots), 0, text);
  const Count hi = parse_count(text.substr(dots + 2), dots + 2, text);
  if (lo > hi) throw ParseError(std::string(text), 0, "range is empty");
  return {lo, hi};
}

std::vector<PartProfile> parse_big_list(std::string_view text) {
  std::vector<PartProfile> out;
  std::size_t start = 0;
  for (;;) {
    const auto end = text.find(';', start);
    const auto piece = text.substr(start, end == std::string_view::npos
                                              ? std::string_view::npos
                                              : end - start);
    PartProfile p;
    try {
      p = parse_profile(piece);
    } catch (const ParseError& e) {
      throw ParseError(e.token(), start + e.position(),
                       "bad big-part profile");
    }
    for (Count part : p.parts()) {
      if (part < 4) {
        throw ParseError(std::string(piece), start,
                         "big-part profiles need every part >= 4");
      }
    }
    out.push_back(std::move(p));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(value);
  }
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

int cmd_theta(const RunConfig& config, std::ostream& out, std::ostream& err) {
  PartProfile profile;
  try {
    profile = parse_profile(config.spec);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const ThicknessResult r = point_thickness(profile);
  if (config.format == OutputFormat::Json) {
    json j = r;
    j["profile"] = to_string(profile);
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << "profile: " << display(profile) << '\n';
  out << "value: " << r.value << '\n';
  print_trace(out, r);
  return kExitOk;
}

int cmd_witness(const RunConfig& config, std::ostream& out, std::ostream& err) {
  PartProfile profile;
  try {
    profile = parse_profile(config.spec);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const Partition w = construct_partition(profile);
  if (config.format == OutputFormat::Json) {
    json j = w;
    j["profile"] = to_string(profile);
    j["parts"] = std::vector<Count>(profile.parts().begin(),
                                    profile.parts().end());
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << "profile: " << display(profile) << '\n';
  out << "parts: " << row_text(profile.parts()) << '\n';
  out << "classes: " << w.size() << '\n';
  print_classes(out, profile, w);
  return kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  PartProfile profile;
  try {
    profile = parse_profile(config.spec);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (config.oracle_max < 0 || config.oracle_max > kOracleHardMax) {
    err << "error: --oracle-max must be in [0, " << kOracleHardMax << "]\n";
    return kExitUsage;
  }
  const ThicknessResult formula = point_thickness(profile);
  Partition witness;
  VerifyReport report;
  std::string witness_error;
  try {
    witness = construct_partition(profile);
    report = verify_partition(profile, witness);
  } catch (const InternalError& e) {
    witness_error = e.what();
  }
  const bool witness_ok = witness_error.empty() && report.pass;

  const bool run_oracle = profile.total() <= config.oracle_max;
  ExactResult exact;
  bool oracle_ok = true;
  if (run_oracle) {
    exact = exact_point_thickness(profile, config.oracle_max);
    oracle_ok = exact.value == formula.value &&
                verify_partition(profile, exact.witness).pass;
  }
  const bool agree = witness_ok && oracle_ok;

  if (config.format == OutputFormat::Json) {
    json j;
    j["profile"] = to_string(profile);
    j["formula"] = formula;
    j["witness"] = witness;
    j["report"] = report;
    j["oracle"] = run_oracle ? json{{"value", exact.value},
                                    {"witness", exact.witness}}
                             : json();
    j["oracle_skipped"] = !run_oracle;
    j["agree"] = agree;
    out << j.dump() << '\n';
  } else {
    out << "profile: " << display(profile) << '\n';
    out << "formula: " << formula.value << " (" << to_string(formula.trace.branch)
        << ")\n";
    if (!witness_error.empty()) {
      out << "witness: ERROR " << witness_error << '\n';
    } else {
      out << "witness: " << report.count << " classes, cover "
          << (report.cover ? "ok" : "FAILED") << ", planar "
          << (std::find(report.class_planarity.begin(),
                        report.class_planarity.end(),
                        false) == report.class_planarity.end()
                  ? "ok"
                  : "FAILED")
          << " -> " << (report.pass ? "agree" : "MISMATCH") << '\n';
    }
    if (run_oracle) {
      out << "oracle: " << exact.value << " -> "
          << (oracle_ok ? "agree" : "MISMATCH") << '\n';
    } else {
      out << "oracle: skipped (" << profile.total() << " vertices > limit "
          << config.oracle_max << ")\n";
    }
    out << "result: " << (agree ? "all agree" : "MISMATCH") << '\n';
  }
  if (!agree) {
    err << "mismatch for " << config.spec << '\n';
    print_trace(err, formula);
    if (witness_error.empty()) {
      print_classes(err, profile, witness);
      for (const auto& p : report.problems) err << "  " << p << '\n';
    }
    if (run_oracle) {
      err << "oracle witness:\n";
      print_classes(err, profile, exact.witness);
    }
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  for (const Range* r : {&config.k1, &config.k2, &config.k3}) {
    if (r->lo < 0 || r->hi < r->lo) {
      err << "error: sweep ranges must be non-negative and non-empty\n";
      return kExitUsage;
    }
  }
  // Multiply step by step so the bound check cannot overflow.
  std::size_t rows = config.big.size();
  for (const Range* r : {&config.k1, &config.k2, &config.k3}) {
    if (rows != 0 && static_cast<std::size_t>(r->size()) > kMaxSweepRows / rows) {
      rows = kMaxSweepRows + 1;
      break;
    }
    rows *= static_cast<std::size_t>(r->size());
  }
  if (rows > kMaxSweepRows || rows == 0) {
    err << "error: sweep would produce " << (rows == 0 ? 0 : rows)
        << " rows; allowed 1.." << kMaxSweepRows << '\n';
    return kExitUsage;
  }

  const bool as_json = config.format == OutputFormat::Json;
  if (as_json) {
    out << '[';
  } else {
    out << "k1,k2,k3,big,p0,n,branch,value\n";
  }
  bool first = true;
  std::size_t remark_failures = 0;
  for (Count k1 = config.k1.lo; k1 <= config.k1.hi; ++k1) {
    for (Count k2 = config.k2.lo; k2 <= config.k2.hi; ++k2) {
      for (Count k3 = config.k3.lo; k3 <= config.k3.hi; ++k3) {
        for (const auto& big : config.big) {
          Decomposition d;
          d.k1 = k1;
          d.k2 = k2;
          d.k3 = k3;
          d.big.assign(big.parts().begin(), big.parts().end());
          d.p0 = k1 + 2 * k2 + 3 * k3;
          const ThicknessResult r = point_thickness(d);
          if (as_json) {
            const json row{{"k1", k1},       {"k2", k2},
                           {"k3", k3},       {"big", d.big},
                           {"p0", d.p0},     {"n", d.n()},
                           {"branch", std::string(to_string(r.trace.branch))},
                           {"value", r.value}};
            out << (first ? "\n" : ",\n") << row.dump();
          } else {
            out << k1 << ',' << k2 << ',' << k3 << ','
                << csv_field(to_string(big)) << ',' << d.p0 << ',' << d.n()
                << ',' << to_string(r.trace.branch) << ',' << r.value << '\n';
          }
          first = false;
          if (config.check_remark && d.p0 > 2 * d.n()) {
            for (std::size_t i = 0; i < big.size(); ++i) {
              const PartProfile bigger = with_part_incremented(big, i);
              Decomposition grown = d;
              grown.big.assign(bigger.parts().begin(), bigger.parts().end());
              const Count v = point_thickness(grown).value;
              if (v != r.value) {
                ++remark_failures;
                err << "remark violated at k1=" << k1 << " k2=" << k2
                    << " k3=" << k3 << " big=" << to_string(big) << ": "
                    << r.value << " vs " << v << " after growing part " << i
                    << '\n';
              }
            }
          }
        }
      }
    }
  }
  if (as_json) out << "\n]\n";
  return remark_failures == 0 ? kExitOk : kExitMismatch;
}

int cmd_selftest(const RunConfig& config, std::ostream& out,
                 std::ostream& err) {
  if (config.oracle_max < 0 || config.oracle_max > kOracleHardMax) {
    err << "error: --oracle-max must be in [0, " << kOracleHardMax << "]\n";
    return kExitUsage;
  }
  const std::uint64_t seed = config.seed;
  const std::vector<SuiteResult> suites{
      check_oracle_vs_formula(config.oracle_max),
      check_boundary(config.oracle_max),
      check_classifier(9),
      check_complete_graphs(200),
      check_witnesses(1000, seed),
      check_big_part_invariance(200, seed),
      check_case_a(200, seed),
      check_monotonicity(200, seed),
  };
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  for (const auto& s : suites) {
    print_suite(out, s);
    if (s.skipped) {
      ++skipped;
    } else if (s.ok()) {
      ++passed;
    } else {
      ++failed;
    }
  }
  out << "summary: " << passed << " passed, " << failed << " failed, "
      << skipped << " skipped (seed " << seed << ", oracle limit "
      << config.oracle_max << ")\n";
  return failed == 0 ? kExitOk : kExitMismatch;
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Point-thickness of complete multipartite graphs", "ptk"};
  app.require_subcommand(1);

  RunConfig config;
  bool json_flag = false;
  bool csv_flag = false;
  std::string k1 = "0";
  std::string k2 = "0";
  std::string k3 = "0";
  std::string big;

  auto* theta = app.add_subcommand("theta", "closed-form point-thickness");
  theta->add_option("spec", config.spec, "profile, e.g. 1^3,2^2,5")->required();
  theta->add_flag("--json", json_flag, "emit JSON");

  auto* witness = app.add_subcommand("witness", "construct a witness partition");
  witness->add_option("spec", config.spec, "profile")->required();
  witness->add_flag("--json", json_flag, "emit JSON");

  auto* verify = app.add_subcommand(
      "verify", "compare formula, witness and (small cases) exact oracle");
  verify->add_option("spec", config.spec, "profile")->required();
  verify->add_option("--oracle-max", config.oracle_max,
                     "largest vertex count handed to the exact oracle");
  verify->add_flag("--json", json_flag, "emit JSON");

  auto* sweep = app.add_subcommand("sweep", "tabulate values over k1, k2, k3");
  sweep->add_option("--k1", k1, "range A..B");
  sweep->add_option("--k2", k2, "range A..B");
  sweep->add_option("--k3", k3, "range A..B");
  sweep->add_option("--big", big, "big-part profiles separated by ';'");
  sweep->add_flag("--check-remark", config.check_remark,
                  "check that growing a big part keeps the value when p0 > 2n");
  sweep->add_flag("--csv", csv_flag, "emit CSV (default)");
  sweep->add_flag("--json", json_flag, "emit JSON");

  auto* selftest = app.add_subcommand("selftest", "run every cross-check");
  selftest->add_option("--oracle-max", config.oracle_max,
                       "largest total for the exhaustive oracle suite");
  selftest->add_option("--seed", config.seed, "seed for randomized suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    const int code = app.exit(e, msg, msg);
    err << msg.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (json_flag && csv_flag) {
    err << "error: --json and --csv are mutually exclusive\n";
    return kExitUsage;
  }
  config.format = json_flag ? OutputFormat::Json
                  : csv_flag ? OutputFormat::Csv
                             : OutputFormat::Human;

  try {
    if (theta->parsed()) {
      config.command = Command::Theta;
      return cmd_theta(config, out, err);
    }
    if (witness->parsed()) {
      config.command = Command::Witness;
      return cmd_witness(config, out, err);
    }
    if (verify->parsed()) {
      config.command = Command::Verify;
      return cmd_verify(config, out, err);
    }
    if (sweep->parsed()) {
      config.command = Command::Sweep;
      config.k1 = parse_range(k1);
      config.k2 = parse_range(k2);
      config.k3 = parse_range(k3);
      if (!big.empty()) config.big = parse_big_list(big);
      return cmd_sweep(config, out, err);
    }
    if (selftest->parsed()) {
      config.command = Command::Selftest;
      return cmd_selftest(config, out, err);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}

}  // namespace ptk::cli
