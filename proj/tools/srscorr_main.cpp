// srscorr: command-line front end over the srscorr C API.
//
// Exit codes: 0 success, 1 usage error, 2 computation error, 3 verification
// failure.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "srscorr/srscorr.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCompute = 2;
constexpr int kExitVerify = 3;

constexpr std::uint64_t kDefaultTrials = 1'000'000;
constexpr std::uint64_t kDefaultSeed = 42;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ReportDeleter {
  void operator()(srscorr_report* r) const { srscorr_report_free(r); }
};
using ReportPtr = std::unique_ptr<srscorr_report, ReportDeleter>;

struct Options {
  std::int64_t k = -1;
  std::int64_t m = -1;
  std::int64_t N = -1;
  std::int64_t n = -1;
  std::string f;
  std::string grid;
  std::string grid_geom;
  std::uint64_t trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "json";
  int precision = 12;
  std::string out;
  std::string suite = "all";
  int max_k = 0;
};

std::int64_t parse_int(const std::string& s, const char* what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw UsageError(std::string("malformed ") + what + " '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) parts.push_back(part);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::vector<std::int64_t> build_grid(const Options& o) {
  if (o.grid.empty() == o.grid_geom.empty()) throw UsageError("scan needs exactly one of --grid or --grid-geom");
  std::vector<std::int64_t> grid;
  if (!o.grid.empty()) {
    for (const auto& p : split(o.grid, ',')) grid.push_back(parse_int(p, "grid entry"));
  } else {
    auto parts = split(o.grid_geom, ':');
    if (parts.size() != 3) throw UsageError("--grid-geom expects start:factor:count");
    const std::int64_t start = parse_int(parts[0], "grid start");
    const std::int64_t factor = parse_int(parts[1], "grid factor");
    const std::int64_t count = parse_int(parts[2], "grid count");
    if (start < 1 || factor < 2 || count < 1) throw UsageError("--grid-geom needs start >= 1, factor >= 2, count >= 1");
    std::int64_t v = start;
    for (std::int64_t i = 0; i < count; ++i) {
      grid.push_back(v);
      if (i + 1 < count && v > INT64_MAX / factor) throw UsageError("--grid-geom overflows 64-bit integers");
      v *= factor;
    }
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 1) throw UsageError("grid entries must be positive");
    if (i > 0 && grid[i] <= grid[i - 1]) throw UsageError("grid must be strictly ascending");
  }
  return grid;
}

void require_flag(bool present, const char* flag) {
  if (!present) throw UsageError(std::string("missing required flag ") + flag);
}

void check_range(std::int64_t v, std::int64_t lo, std::int64_t hi, const char* flag) {
  if (v < lo || v > hi) throw UsageError(std::string(flag) + " is out of range");
}

// Maps a C API failure onto an exit code.
int api_failure(srscorr_status status) {
  std::cerr << "srscorr: " << srscorr_last_error() << "\n";
  return status == SRSCORR_ERR_INVALID_ARGUMENT ? kExitUsage : kExitCompute;
}

int write_report(const srscorr_report* report, const Options& o, srscorr_row_kind kind) {
  srscorr_format format;
  if (o.format == "json") {
    format = SRSCORR_FORMAT_JSON;
  } else if (o.format == "csv") {
    format = SRSCORR_FORMAT_CSV;
  } else {
    throw UsageError("unsupported format '" + o.format + "'");
  }
  char* text = nullptr;
  std::size_t len = 0;
  if (auto st = srscorr_report_emit(report, format, o.precision, kind, &text, &len); st != SRSCORR_OK)
    return api_failure(st);
  std::unique_ptr<char, void (*)(char*)> owned(text, srscorr_string_free);
  if (o.out.empty()) {
    std::fwrite(text, 1, len, stdout);
    std::fflush(stdout);
  } else {
    std::ofstream file(o.out, std::ios::binary);
    file.write(text, static_cast<std::streamsize>(len));
    if (!file) {
      std::cerr << "srscorr: cannot write " << o.out << "\n";
      return kExitCompute;
    }
  }
  return kExitOk;
}

void print_diagnostics(const srscorr_report* report) {
  for (std::size_t i = 0; i < srscorr_report_diagnostic_count(report); ++i)
    std::cerr << "srscorr: " << srscorr_report_diagnostic(report, i) << "\n";
}

int run_verb(const std::string& verb, const Options& o) {
  if (o.precision < 1) throw UsageError("--precision must be >= 1");
  srscorr_report* raw = nullptr;
  if (auto st = srscorr_report_create(&raw); st != SRSCORR_OK) return api_failure(st);
  ReportPtr report(raw);

  if (verb == "corr") {
    require_flag(o.k >= 0 && o.N >= 0 && o.n >= 0, "--k, --N and --n");
    check_range(o.k, 0, INT32_MAX, "--k");
    if (auto st = srscorr_report_add_corr(report.get(), static_cast<int32_t>(o.k), o.N, o.n); st != SRSCORR_OK)
      return api_failure(st);
    return write_report(report.get(), o, SRSCORR_ROW_CORR);
  }
  if (verb == "limit") {
    require_flag(o.k >= 0 && !o.f.empty(), "--k and --f");
    check_range(o.k, 2, INT32_MAX, "--k");
    if (auto st = srscorr_report_add_limit(report.get(), static_cast<int32_t>(o.k), o.f.c_str()); st != SRSCORR_OK)
      return api_failure(st);
    return write_report(report.get(), o, SRSCORR_ROW_LIMIT);
  }
  if (verb == "scan") {
    require_flag(o.k >= 0 && !o.f.empty(), "--k and --f");
    check_range(o.k, 2, INT32_MAX, "--k");
    auto grid = build_grid(o);
    std::size_t failed = 0;
    if (auto st = srscorr_report_add_scan(report.get(), static_cast<int32_t>(o.k), o.f.c_str(), grid.data(),
                                          grid.size(), &failed);
        st != SRSCORR_OK)
      return api_failure(st);
    print_diagnostics(report.get());
    int rc = write_report(report.get(), o, SRSCORR_ROW_CORR);
    return rc != kExitOk ? rc : (failed ? kExitCompute : kExitOk);
  }
  if (verb == "mc") {
    require_flag(o.k >= 0 && o.N >= 0 && o.n >= 0, "--k, --N and --n");
    check_range(o.k, 0, INT32_MAX, "--k");
    if (o.trials < 1) throw UsageError("--trials must be >= 1");
    if (auto st = srscorr_report_add_mc(report.get(), static_cast<int32_t>(o.k), o.N, o.n, o.trials, o.seed);
        st != SRSCORR_OK)
      return api_failure(st);
    return write_report(report.get(), o, SRSCORR_ROW_MC);
  }
  if (verb == "ppoly") {
    require_flag(o.k >= 0 && o.m >= 0, "--k and --m");
    check_range(o.k, 0, 200, "--k");
    check_range(o.m, 0, 200, "--m");
    if (auto st = srscorr_report_add_ppoly(report.get(), static_cast<int32_t>(o.k), static_cast<int32_t>(o.m));
        st != SRSCORR_OK)
      return api_failure(st);
    return write_report(report.get(), o, SRSCORR_ROW_PPOLY);
  }
  if (verb == "verify") {
    if (o.max_k < 0) throw UsageError("--max-k must be >= 0");
    std::size_t failures = 0;
    if (auto st = srscorr_report_add_verify(report.get(), o.suite.c_str(), o.max_k, &failures); st != SRSCORR_OK)
      return api_failure(st);
    print_diagnostics(report.get());
    int rc = write_report(report.get(), o, SRSCORR_ROW_VERIFY);
    return rc != kExitOk ? rc : (failures ? kExitVerify : kExitOk);
  }
  throw UsageError("unknown verb '" + verb + "'");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact high-order correlations of simple random sampling"};
  app.require_subcommand(1, 1);

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "json (JSON lines) or csv");
    cmd->add_option("--precision", o.precision, "fractional digits of decimal fields (default 12)");
    cmd->add_option("--out", o.out, "write the report to this file instead of stdout");
  };

  auto* corr = app.add_subcommand("corr", "exact Corr(k) for population N and sample size n");
  corr->add_option("--k", o.k, "correlation order");
  corr->add_option("--N", o.N, "population size");
  corr->add_option("--n", o.n, "sample size");
  add_output(corr);

  auto* limit = app.add_subcommand("limit", "large-N limit of the scaled correlation at fraction f");
  limit->add_option("--k", o.k, "correlation order (>= 2)");
  limit->add_option("--f", o.f, "sampling fraction p/q in (0,1)");
  add_output(limit);

  auto* scan = app.add_subcommand("scan", "scaled correlations over a grid of population sizes");
  scan->add_option("--k", o.k, "correlation order (>= 2)");
  scan->add_option("--f", o.f, "target sampling fraction p/q in (0,1)");
  scan->add_option("--grid", o.grid, "population sizes N1,N2,... (ascending)");
  scan->add_option("--grid-geom", o.grid_geom, "geometric grid start:factor:count");
  add_output(scan);

  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of Corr(k)");
  mc->add_option("--k", o.k, "correlation order");
  mc->add_option("--N", o.N, "population size");
  mc->add_option("--n", o.n, "sample size");
  mc->add_option("--trials", o.trials, "number of simulated samples (default 1000000)");
  mc->add_option("--seed", o.seed, "64-bit generator seed (default 42)");
  add_output(mc);

  auto* ppoly = app.add_subcommand("ppoly", "coefficients of the polynomial P_{k,m}(j)");
  ppoly->add_option("--k", o.k, "first index");
  ppoly->add_option("--m", o.m, "second index");
  add_output(ppoly);

  auto* verify = app.add_subcommand("verify", "run the identity verification suite");
  verify->add_option("--suite", o.suite, "exactnum, ppoly, correlation, oracle or all");
  verify->add_option("--max-k", o.max_k, "cap on order-like ranges (0 = default ranges)");
  add_output(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return run_verb(app.get_subcommands().front()->get_name(), o);
  } catch (const UsageError& e) {
    std::cerr << "srscorr: " << e.what() << "\n";
    return kExitUsage;
  }
}
