#include "wk/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>

#include "wk/identities.hpp"

namespace wk::cli {

std::vector<OutputRecord> build_table(std::int64_t genus_max, TwoPointEvaluator& evaluator, Method method) {
  std::vector<OutputRecord> rows;
  for (std::int64_t g = 1; g <= genus_max; ++g) {
    for (std::int64_t d1 = 0; d1 <= 3 * g - 1; ++d1) {
      const std::int64_t d2 = 3 * g - 1 - d1;
      rows.push_back({g, d1, d2, evaluator.evaluate(d1, d2, method)});
    }
  }
  return rows;
}

std::string render_csv(const std::vector<OutputRecord>& records) {
  std::ostringstream os;
  os << "g,d1,d2,value\n";
  for (const auto& r : records) os << r.g << ',' << r.d1 << ',' << r.d2 << ',' << r.value << '\n';
  return os.str();
}

std::string render_json(const std::vector<OutputRecord>& records) {
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    array.push_back({{"g", r.g}, {"d1", r.d1}, {"d2", r.d2}, {"value", r.value.to_string()}});
  }
  return array.dump(2) + "\n";
}

namespace {

std::int64_t parse_int(std::string_view field) {
  if (field.empty()) throw DomainError("empty integer field");
  std::size_t used = 0;
  const std::string s(field);
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw DomainError("bad integer field '" + s + "'");
  }
  if (used != s.size()) throw DomainError("bad integer field '" + s + "'");
  return v;
}

}  // namespace

std::vector<OutputRecord> parse_csv(std::string_view text) {
  std::vector<OutputRecord> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "g,d1,d2,value") throw DomainError("csv: missing header g,d1,d2,value");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::string_view rest = line;
    for (auto comma = rest.find(','); comma != std::string_view::npos; comma = rest.find(',')) {
      fields.push_back(rest.substr(0, comma));
      rest.remove_prefix(comma + 1);
    }
    fields.push_back(rest);
    if (fields.size() != 4) throw DomainError("csv: expected 4 fields in '" + line + "'");
    rows.push_back({parse_int(fields[0]), parse_int(fields[1]), parse_int(fields[2]), ExactRational::parse(fields[3])});
  }
  return rows;
}

std::vector<OutputRecord> parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("json: ") + e.what());
  }
  if (!doc.is_array()) throw DomainError("json: expected an array");
  std::vector<OutputRecord> rows;
  try {
    for (const auto& item : doc) {
      rows.push_back({item.at("g").get<std::int64_t>(), item.at("d1").get<std::int64_t>(),
                      item.at("d2").get<std::int64_t>(), ExactRational::parse(item.at("value").get<std::string>())});
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("json: ") + e.what());
  }
  return rows;
}

namespace {

int cmd_compute(std::int64_t d1, std::int64_t d2, const std::string& method_text, std::ostream& out,
                std::ostream& err) {
  try {
    out << two_point(d1, d2, parse_method(method_text)) << '\n';
    return kExitOk;
  } catch (const EquivalenceViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_table(std::int64_t genus_max, const std::string& format, std::ostream& out, std::ostream& err) {
  if (genus_max < 1) {
    err << "error: --genus-max must be >= 1\n";
    return kExitUsage;
  }
  TwoPointEvaluator evaluator;
  try {
    const auto rows = build_table(genus_max, evaluator, Method::kBoth);
    out << (format == "json" ? render_json(rows) : render_csv(rows));
  } catch (const EquivalenceViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitOk;
}

int cmd_verify(std::int64_t genus_max, std::int64_t oracle_genus_max, std::ostream& out, std::ostream& err) {
  if (genus_max < 1) {
    err << "error: --genus-max must be >= 1\n";
    return kExitUsage;
  }
  if (oracle_genus_max < 0) oracle_genus_max = std::min<std::int64_t>(genus_max, 8);
  if (oracle_genus_max > genus_max) {
    err << "error: --oracle-genus-max (" << oracle_genus_max << ") exceeds --genus-max (" << genus_max << ")\n";
    return kExitUsage;
  }
  const VerificationSummary summary = verify_range(VerifyOptions{genus_max, oracle_genus_max, 0});
  out << "verify genus-max=" << genus_max << " oracle-genus-max=" << oracle_genus_max << '\n';
  for (std::size_t i = 0; i < kIdentityCount; ++i) {
    if (summary.checked[i] == 0) continue;
    out << "  " << identity_name(static_cast<IdentityId>(i)) << ": " << summary.checked[i] << " checked, "
        << summary.failed[i] << " failed\n";
  }
  out << "total: " << summary.total_checked() << " checked, " << summary.total_failed() << " failed\n";
  for (const auto& failure : summary.failures) out << "FAILED " << to_json(failure).dump() << '\n';
  out << (summary.ok() ? "PASS" : "FAIL") << '\n';
  return summary.ok() ? kExitOk : kExitVerificationFailed;
}

void bench_one(std::int64_t genus_max, Method method, std::ostream& out) {
  TwoPointEvaluator evaluator;
  const auto start = std::chrono::steady_clock::now();
  const auto rows = build_table(genus_max, evaluator, method);
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
  const EvaluationCounters counters = evaluator.counters();
  out << "method=" << method_name(method) << " genus-max=" << genus_max << " values=" << rows.size()
      << " a_evaluations=" << counters.a_evaluations << " b_evaluations=" << counters.b_evaluations
      << " elapsed_ms=" << elapsed.count() << '\n';
}

int cmd_bench(std::int64_t genus_max, const std::string& method_text, std::ostream& out, std::ostream& err) {
  if (genus_max < 1) {
    err << "error: --genus-max must be >= 1\n";
    return kExitUsage;
  }
  const Method method = parse_method(method_text);
  if (method == Method::kBoth) {
    bench_one(genus_max, Method::kBdy, out);
    bench_one(genus_max, Method::kZograf, out);
  } else {
    bench_one(genus_max, method, out);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact two-point Witten-Kontsevich correlators", "wkcorr"};
  app.require_subcommand(1);
  const std::vector<std::string> methods{"bdy", "zograf", "both"};

  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
  std::string method = "both";
  auto* compute = app.add_subcommand("compute", "Print <tau_d1 tau_d2>_g as p/q");
  compute->add_option("d1", d1)->required();
  compute->add_option("d2", d2)->required();
  compute->add_option("--method", method)->check(CLI::IsMember(methods));

  std::int64_t genus_max = 0;
  std::string format = "csv";
  auto* table = app.add_subcommand("table", "Emit every two-point value up to a genus");
  table->add_option("--genus-max", genus_max)->required();
  table->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  std::int64_t oracle_genus_max = -1;
  auto* verify = app.add_subcommand("verify", "Check every identity instance up to a genus");
  verify->add_option("--genus-max", genus_max)->required();
  verify->add_option("--oracle-genus-max", oracle_genus_max, "Cross-check against the DVV recursion up to this genus");

  std::string bench_method;
  auto* bench = app.add_subcommand("bench", "Time full-table evaluation and count coefficient evaluations");
  bench->add_option("--genus-max", genus_max)->required();
  bench->add_option("--method", bench_method)->required()->check(CLI::IsMember(methods));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (compute->parsed()) return cmd_compute(d1, d2, method, out, err);
  if (table->parsed()) return cmd_table(genus_max, format, out, err);
  if (verify->parsed()) {
    if (verify->count("--oracle-genus-max") > 0 && oracle_genus_max < 0) {
      err << "error: --oracle-genus-max must be >= 0\n";
      return kExitUsage;
    }
    return cmd_verify(genus_max, oracle_genus_max, out, err);
  }
  if (bench->parsed()) return cmd_bench(genus_max, bench_method, out, err);
  return kExitUsage;
}

}  // namespace wk::cli
