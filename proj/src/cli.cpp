#include "colmah/cli.hpp"

#include <algorithm>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "colmah/cap.hpp"
#include "colmah/mahonian.hpp"
#include "colmah/oracle.hpp"
#include "colmah/reports.hpp"
#include "colmah/special.hpp"
#include "colmah/statistics.hpp"

namespace colmah {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

// A header plus rows of strings, printed as CSV or as a JSON array of
// objects keyed by the header.
struct Rows {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void write(std::ostream& out, bool json) const {
    if (json) {
      auto array = Json::array();
      for (const auto& row : rows) {
        Json obj = Json::object();
        for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
        array.push_back(std::move(obj));
      }
      out << array.dump(2) << '\n';
      return;
    }
    auto line = [&](const std::vector<std::string>& fields) {
      for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
      out << '\n';
    };
    line(header);
    for (const auto& row : rows) line(row);
  }
};

ExactInt cap_or_default(const std::optional<std::int64_t>& flag) {
  if (!flag) return cap_from_environment();
  if (*flag < 0) throw UsageError("--cap must be non-negative");
  return *flag;
}

int cmd_stat(const std::string& perm, int c, bool json, std::ostream& out) {
  if (c < 1) throw UsageError("--c must be at least 1");
  const auto sigma = parse_colored(perm, c);
  const auto pi = sigma.underlying();
  Rows rows{{"perm", "c", "inv", "maj", "col", "cross_term", "inv_c", "tilde_inv_c"},
            {{format(sigma), std::to_string(c), inv(pi).str(), maj(pi).str(), col(sigma).str(),
              cross_term(sigma).str(), inv_c(sigma).str(), tilde_inv_c(sigma).str()}}};
  if (json) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < rows.header.size(); ++i) obj[rows.header[i]] = rows.rows[0][i];
    out << obj.dump(2) << '\n';
  } else {
    rows.write(out, false);
  }
  return kExitOk;
}

struct SeqFlags {
  std::string name;
  int c = 1;
  int n_min = 1;
  int n_max = 0;
  std::optional<std::int64_t> k;
  std::string method = "gen_func";
};

int cmd_seq(const SeqFlags& f, bool json, std::ostream& out) {
  if (f.c < 1) throw UsageError("--c must be at least 1");
  if (f.n_min < 0 || f.n_max < f.n_min) throw UsageError("need 0 <= --n-min <= --n-max");
  const auto method = parse_method(f.method);
  if (!method) throw UsageError("unknown method '" + f.method + "'");
  if (f.name != "ic" && (f.k || f.method != "gen_func")) {
    throw UsageError("--k and --method apply only to --name ic");
  }

  Rows rows;
  if (f.name == "ic") {
    rows.header = {"n", "k", "value"};
    for (int n = f.n_min; n <= f.n_max; ++n) {
      std::int64_t lo = 0;
      std::int64_t hi = *method == MahonianMethod::KnuthNetto ? n : kernel::max_inv_c(n, f.c);
      if (f.k) lo = hi = *f.k;
      if (lo < 0) throw UsageError("--k must be non-negative");
      for (std::int64_t k = lo; k <= hi; ++k) {
        rows.rows.push_back({std::to_string(n), std::to_string(k), i_colored(*method, n, k, f.c).str()});
      }
    }
  } else {
    ExactInt (*formula)(int, int) = nullptr;
    if (f.name == "I") formula = total_inversions_closed;
    if (f.name == "d") formula = derangement_count;
    if (f.name == "t") formula = t_colored;
    if (f.name == "r") formula = involution_count;
    if (f.name == "iinv") formula = involution_inv_total;
    if (!formula) throw UsageError("unknown sequence '" + f.name + "'");
    rows.header = {"n", "value"};
    for (int n = f.n_min; n <= f.n_max; ++n) rows.rows.push_back({std::to_string(n), formula(n, f.c).str()});
  }
  rows.write(out, json);
  return kExitOk;
}

struct DistFlags {
  int c = 1;
  int n = 0;
  std::string cls = "all";
  std::string statistic = "inv_c";
  std::optional<std::int64_t> cap;
  bool check = false;
  int threads = 1;
};

int cmd_dist(const DistFlags& f, bool json, std::ostream& out, std::ostream& err) {
  if (f.c < 1 || f.n < 0) throw UsageError("need --c >= 1 and --n >= 0");
  if (f.threads < 1) throw UsageError("--threads must be at least 1");
  const auto cls = parse_class(f.cls);
  if (!cls) throw UsageError("unknown class '" + f.cls + "'");
  const auto stat = parse_statistic(f.statistic);
  if (!stat) throw UsageError("unknown statistic '" + f.statistic + "'");
  const bool checkable = *cls == ClassKind::All &&
                         (*stat == StatisticKind::InvC || *stat == StatisticKind::TildeInvC);
  if (f.check && !checkable) throw UsageError("--check needs --class all and inv_c or tilde_inv_c");

  const auto d = distribution(f.n, f.c, *cls, *stat, cap_or_default(f.cap), f.threads);
  const auto gf = gf_colored(f.n, f.c);
  Rows rows;
  rows.header = {"k", "count"};
  if (f.check) rows.header.push_back("gf");
  bool agree = true;
  for (std::size_t k = 0; k < d.histogram.size(); ++k) {
    rows.rows.push_back({std::to_string(k), d.histogram[k].str()});
    if (f.check) {
      const auto expected = gf.coefficient(static_cast<std::int64_t>(k));
      rows.rows.back().push_back(expected.str());
      agree = agree && expected == d.histogram[k];
    }
  }
  rows.write(out, json);
  if (f.check && !agree) {
    err << "histogram differs from the product formula\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_table(int which, const std::optional<std::int64_t>& cap, bool json, std::ostream& out) {
  if (which < 1 || which > 4) throw UsageError("--which must be 1, 2, 3 or 4");
  const auto report = table_report(which, cap_or_default(cap));
  out << (json ? table_report_json(report) : table_report_csv(report));
  return report.clean() ? kExitOk : kExitMismatch;
}

int cmd_verify(std::optional<std::int64_t> budget, int threads, bool json, std::ostream& out) {
  VerifyOptions options;
  if (budget) {
    if (*budget < 0) throw UsageError("--budget must be non-negative");
    options.budget = *budget;
  } else {
    options.budget = cap_from_environment();
  }
  if (threads < 1) throw UsageError("--threads must be at least 1");
  options.threads = threads;
  const auto report = verify_suite(options);
  if (json) {
    out << report_to_json(report) << '\n';
  } else {
    Rows rows{{"identity", "params", "status", "detail"}, {}};
    for (const auto& e : report) {
      std::string params;
      for (const auto& [key, value] : e.params) params += (params.empty() ? "" : ";") + key + "=" + value;
      rows.rows.push_back({e.identity, params, e.pass ? "pass" : "fail", e.detail});
    }
    rows.write(out, false);
  }
  const bool ok = std::all_of(report.begin(), report.end(), [](const ReportEntry& e) { return e.pass; });
  return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Colored permutation statistics, colored Mahonian numbers and their oracles", "colmah"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  std::string format_flag;
  app.add_option("--format", format_flag, "Output format (csv or json; verify defaults to json)")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* stat = app.add_subcommand("stat", "Statistics of one colored permutation");
  std::string perm;
  int stat_c = 1;
  stat->add_option("--perm", perm, "Window as space-separated v[k] tokens")->required();
  stat->add_option("--c", stat_c, "Number of colors")->required();

  auto* seq = app.add_subcommand("seq", "Sequence values by formula");
  SeqFlags sf;
  seq->add_option("--name", sf.name, "ic, I, d, t, r or iinv")
      ->required()
      ->check(CLI::IsMember({"ic", "I", "d", "t", "r", "iinv"}));
  seq->add_option("--c", sf.c, "Number of colors")->required();
  seq->add_option("--n-max", sf.n_max, "Last n")->required();
  seq->add_option("--n-min", sf.n_min, "First n (default 1)");
  seq->add_option("--k", sf.k, "Single k for ic");
  seq->add_option("--method", sf.method, "Engine for ic (default gen_func)");

  auto* dist = app.add_subcommand("dist", "Histogram by exhaustive enumeration");
  DistFlags df;
  dist->add_option("--c", df.c, "Number of colors")->required();
  dist->add_option("--n", df.n, "Size")->required();
  dist->add_option("--class", df.cls, "all, derangements or involutions");
  dist->add_option("--statistic", df.statistic, "inv_c, tilde_inv_c, inv or col");
  dist->add_option("--cap", df.cap, "Enumeration cap (default MAHONIAN_CAP or 10^7)");
  dist->add_flag("--check", df.check, "Compare against the product formula");
  dist->add_option("--threads", df.threads, "Worker threads");

  auto* table = app.add_subcommand("table", "Recompute a published table and diff it");
  int which = 0;
  std::optional<std::int64_t> table_cap;
  table->add_option("--which", which, "1, 2, 3 or 4")->required();
  table->add_option("--cap", table_cap, "Enumeration cap for tables 1 and 3");

  auto* verify = app.add_subcommand("verify", "Run every cross-check");
  std::optional<std::int64_t> budget;
  int verify_threads = 1;
  verify->add_option("--budget", budget, "Largest group enumerated (default MAHONIAN_CAP or 10^7)");
  verify->add_option("--threads", verify_threads, "Worker threads");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const bool verify_cmd = verify->parsed();
  const bool json = format_flag == "json" || (format_flag.empty() && verify_cmd);
  try {
    if (stat->parsed()) return cmd_stat(perm, stat_c, json, out);
    if (seq->parsed()) return cmd_seq(sf, json, out);
    if (dist->parsed()) return cmd_dist(df, json, out, err);
    if (table->parsed()) return cmd_table(which, table_cap, json, out);
    return cmd_verify(budget, verify_threads, json, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitLimit;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitLimit;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace colmah
