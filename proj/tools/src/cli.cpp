#include "areawalk_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "areawalk/area_enum.hpp"
#include "areawalk/hofstadter.hpp"
#include "areawalk/kreft.hpp"
#include "areawalk/version.hpp"
#include "areawalk/walk_oracle.hpp"
#include "areawalk_cli/cache.hpp"
#include "areawalk_cli/envelope.hpp"

namespace areawalk::cli {

std::string format_real(double v) {
  if (std::abs(v) < 1e-9) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

void require_walk_length(int n, int max_n) {
  if (max_n < 2) throw InvalidArgument("--max-n must be at least 2");
  if (n < 2 || n % 2 != 0) throw InvalidArgument("--n must be even and >= 2");
  if (n > max_n) throw InvalidArgument("--n exceeds --max-n (" + std::to_string(max_n) + ")");
}

// Fetch through the cache when one is configured.
template <class Compute>
ResultEnvelope cached(const std::string& command, const json& params, Compute compute) {
  const auto cache = ResultCache::from_environment();
  if (cache) {
    if (auto hit = cache->lookup(command, params)) return *hit;
  }
  ResultEnvelope e = make_envelope(command, params, compute());
  if (cache) cache->store(e);
  return e;
}

// ---------------------------------------------------------------------------
// area

struct AreaArgs {
  int n = 0;
  std::string format = "csv";
  unsigned threads = 1;
  int max_n = 20;
};

int cmd_area(const AreaArgs& a, std::ostream& out) {
  require_walk_length(a.n, a.max_n);
  const json params{{"n", a.n}};
  const ResultEnvelope e = cached("area", params, [&] {
    return distribution_payload(enumerate_areas(a.n, EnumerationOptions{a.threads}));
  });

  if (a.format == "json") {
    out << to_json(e).dump(2) << '\n';
    return kExitOk;
  }
  const AreaDistribution d = distribution_from_payload(a.n, e.payload);
  if (a.format == "csv") {
    out << "# closed walks of length " << a.n << " by area A >= 0; C(-A) = C(A)\n";
    out << "A,count\n";
    for (const auto& [area, c] : d.counts) {
      if (area >= 0) out << area << ',' << to_string(c) << '\n';
    }
    return kExitOk;
  }
  std::size_t width = 5;
  for (const auto& [area, c] : d.counts) width = std::max(width, to_string(c).size());
  out << "n = " << a.n << ", total " << to_string(d.total()) << " (symmetric: C(-A) = C(A))\n";
  out << std::setw(6) << "A" << "  " << std::setw(static_cast<int>(width)) << "count" << '\n';
  for (const auto& [area, c] : d.counts) {
    if (area >= 0) out << std::setw(6) << area << "  " << std::setw(static_cast<int>(width)) << to_string(c) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// lambda

struct LambdaArgs {
  int n = 0;
  std::string format = "table";
  unsigned threads = 1;
  int max_n = 20;
};

int cmd_lambda(const LambdaArgs& a, std::ostream& out) {
  require_walk_length(a.n, a.max_n);
  const json params{{"n", a.n}};
  const ResultEnvelope e = cached("lambda", params, [&] {
    return lambda_payload(a.n, lambda_area_table(a.n, EnumerationOptions{a.threads}));
  });

  if (a.format == "json") {
    out << to_json(e).dump(2) << '\n';
    return kExitOk;
  }
  const std::vector<AreaDistribution> table = lambda_from_payload(e.payload);
  int amax = 0;
  for (const auto& row : table) amax = std::max(amax, row.max_abs_area());

  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"m"};
  for (int area = -amax; area <= amax; ++area) header.push_back(std::to_string(area));
  header.push_back("total");
  cells.push_back(header);

  AreaDistribution column_totals{a.n, {}};
  for (std::size_t m = 0; m < table.size(); ++m) {
    std::vector<std::string> row{std::to_string(m)};
    for (int area = -amax; area <= amax; ++area) row.push_back(to_string(table[m].at(area)));
    row.push_back(to_string(table[m].total()));
    for (const auto& [area, c] : table[m].counts) column_totals.add(area, c);
    cells.push_back(std::move(row));
  }
  std::vector<std::string> totals{"total"};
  for (int area = -amax; area <= amax; ++area) totals.push_back(to_string(column_totals.at(area)));
  totals.push_back(to_string(column_totals.total()));
  cells.push_back(std::move(totals));

  if (a.format == "csv") {
    for (const auto& row : cells) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
      out << '\n';
    }
    return kExitOk;
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  out << "n = " << a.n << ": rows m = number of right steps, columns A\n";
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << row[i];
    }
    out << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

std::string diff_distributions(const AreaDistribution& got, const AreaDistribution& want) {
  std::ostringstream s;
  std::map<int, bool> keys;
  for (const auto& kv : got.counts) keys[kv.first] = true;
  for (const auto& kv : want.counts) keys[kv.first] = true;
  for (const auto& kv : keys) {
    const BigCount g = got.at(kv.first);
    const BigCount w = want.at(kv.first);
    if (g != w) s << "    A=" << kv.first << ": formula " << to_string(g) << ", oracle " << to_string(w) << '\n';
  }
  return s.str();
}

int cmd_verify(int n_max, std::ostream& out, std::ostream& err) {
  if (n_max < 2 || n_max % 2 != 0) throw InvalidArgument("--n-max must be even and >= 2");
  if (n_max > 14) throw InvalidArgument("--n-max must be <= 14");
  const auto start = std::chrono::steady_clock::now();
  int failures = 0;

  for (int n = 2; n <= n_max; n += 2) {
    const AreaDistribution got = enumerate_areas(n);
    const AreaDistribution want = oracle_areas(n);
    const bool ok = got == want;
    out << "areas   n=" << n << ": " << (ok ? "ok" : "MISMATCH") << '\n';
    if (!ok) {
      ++failures;
      out << diff_distributions(got, want);
    }
  }

  for (int n = 2; n <= n_max; n += 2) {
    const std::vector<AreaDistribution> got = lambda_area_table(n);
    const std::vector<AreaDistribution> want = oracle_areas_by_steps(n);
    bool ok = got.size() == want.size();
    std::ostringstream diff;
    for (std::size_t m = 0; ok && m < got.size(); ++m) {
      if (got[m] != want[m]) {
        ok = false;
        diff << "    m=" << m << ":\n" << diff_distributions(got[m], want[m]);
      }
    }
    out << "lambda  n=" << n << ": " << (ok ? "ok" : "MISMATCH") << '\n';
    if (!ok) {
      ++failures;
      out << diff.str();
    }
  }

  for (int n = 2; n <= n_max; n += 2) {
    double worst = 0;
    int bad = 0;
    for (long q = 1; q <= 8; ++q) {
      for (long p = 0; p < q; ++p) {
        if (std::gcd(p, q) != 1) continue;
        const MomentReport r = verify_moment_identity(n, RationalFlux(p, q));
        worst = std::max(worst, r.max_deviation);
        if (!r.passed) {
          ++bad;
          out << "    p/q=" << p << '/' << q << ": areas " << format_real(r.from_areas) << ", formula "
              << format_real(r.formula) << ", partition " << format_real(r.partition) << ", matrix "
              << format_real(r.matrix) << ", first-order " << format_real(r.first_order) << '\n';
        }
      }
    }
    out << "moments n=" << n << ": " << (bad == 0 ? "ok" : "MISMATCH") << " (max deviation " << std::scientific
        << std::setprecision(2) << worst << std::defaultfloat << ")\n";
    if (bad) ++failures;
  }

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  err << "verify: " << std::fixed << std::setprecision(2) << secs << " s\n" << std::defaultfloat;
  out << (failures == 0 ? "all checks agree" : std::to_string(failures) + " check(s) failed") << '\n';
  return failures == 0 ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------
// kreft

struct KreftArgs {
  long p = 0;
  long q = 1;
  int j = 1;
  std::string mode = "auto";
  bool all = false;
  std::string format = "table";
};

double kreft_by_mode(const RationalFlux& flux, int j, const std::string& mode) {
  if (mode == "auto") return kreft_coefficient(flux, j);
  if (mode == "direct") return kreft_direct(flux, j);
  if (mode == "extrapolated") return kreft_extrapolated(flux, j);
  if (mode == "series") return kreft_series(flux, j);
  return kreft_closed_form(j).evaluate(flux);
}

int cmd_kreft(const KreftArgs& a, std::ostream& out) {
  const RationalFlux flux(a.p, a.q);
  if (a.j < 1) throw InvalidArgument("--j must be >= 1");
  const json params{{"p", a.p}, {"q", a.q}, {"j", a.j}, {"mode", a.all ? "all" : a.mode}};

  if (!a.all) {
    const double v = kreft_by_mode(flux, a.j, a.mode);
    if (a.format == "json") {
      out << to_json(make_envelope("kreft", params, json{{"value", v}})).dump(2) << '\n';
    } else {
      out << format_real(v) << '\n';
    }
    return kExitOk;
  }

  json methods = json::object();
  std::vector<double> values;
  for (const char* mode : {"direct", "extrapolated", "series", "closed-form"}) {
    try {
      const double v = kreft_by_mode(flux, a.j, mode);
      methods[mode] = v;
      values.push_back(v);
    } catch (const InvalidArgument&) {
      methods[mode] = nullptr;
    }
  }
  double worst = 0;
  for (double x : values) {
    for (double y : values) worst = std::max(worst, relative_deviation(x, y));
  }
  const bool agree = worst <= kRelativeTolerance;

  if (a.format == "json") {
    const json payload{{"methods", methods}, {"max_deviation", worst}, {"agree", agree}};
    out << to_json(make_envelope("kreft", params, payload)).dump(2) << '\n';
  } else {
    out << "a(" << 2 * a.j << ") at p/q = " << flux.str() << '\n';
    for (const auto& [mode, v] : methods.items()) {
      out << "  " << std::left << std::setw(13) << mode << std::right << (v.is_null() ? "n/a" : format_real(v.get<double>()))
          << '\n';
    }
    out << "  max relative deviation " << std::scientific << std::setprecision(2) << worst << std::defaultfloat << '\n';
    out << (agree ? "methods agree" : "methods DISAGREE") << '\n';
  }
  return agree ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------
// trace

struct TraceArgs {
  int n = 0;
  long p = 0;
  long q = 1;
  std::string method = "formula";
  std::string format = "table";
};

int cmd_trace(const TraceArgs& a, std::ostream& out) {
  const RationalFlux flux(a.p, a.q);
  if (a.n < 2 || a.n % 2 != 0) throw InvalidArgument("--n must be even and >= 2");
  const json params{{"n", a.n}, {"p", a.p}, {"q", a.q}, {"method", a.method}};

  if (a.method != "all") {
    double v = 0;
    if (a.method == "formula") v = trace_formula(a.n, flux);
    else if (a.method == "partition") v = trace_partition(a.n, flux);
    else if (a.method == "matrix") v = trace_matrix(a.n, flux);
    else if (a.method == "areas") v = evaluate_at_flux(enumerate_areas(a.n), flux).real();
    else v = a.n * first_order_q(a.n).evaluate(flux);
    if (a.format == "json") {
      out << to_json(make_envelope("trace", params, json{{"value", v}})).dump(2) << '\n';
    } else {
      out << format_real(v) << '\n';
    }
    return kExitOk;
  }

  const MomentReport r = verify_moment_identity(a.n, flux);
  if (a.format == "json") {
    const json payload{{"areas", r.from_areas},       {"formula", r.formula}, {"partition", r.partition},
                       {"matrix", r.matrix},          {"first-order", r.first_order},
                       {"max_deviation", r.max_deviation}, {"agree", r.passed}};
    out << to_json(make_envelope("trace", params, payload)).dump(2) << '\n';
  } else {
    out << "moment n = " << a.n << " at p/q = " << flux.str() << '\n';
    const std::pair<const char*, double> rows[] = {{"areas", r.from_areas},
                                                   {"formula", r.formula},
                                                   {"partition", r.partition},
                                                   {"matrix", r.matrix},
                                                   {"first-order", r.first_order}};
    for (const auto& [name, v] : rows) out << "  " << std::left << std::setw(12) << name << std::right << format_real(v) << '\n';
    out << "  max relative deviation " << std::scientific << std::setprecision(2) << r.max_deviation << std::defaultfloat
        << '\n';
    out << (r.passed ? "methods agree" : "methods DISAGREE") << '\n';
  }
  return r.passed ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed square-lattice walks counted by algebraic area", "areawalk"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  const std::vector<std::string> table_formats{"table", "csv", "json"};

  AreaArgs area_args;
  auto* area = app.add_subcommand("area", "Exact area distribution C_n(A)");
  area->add_option("--n", area_args.n, "Walk length (even)")->required();
  area->add_option("--format", area_args.format, "table | csv | json")
      ->check(CLI::IsMember(table_formats))
      ->capture_default_str();
  area->add_option("--threads", area_args.threads, "Worker threads")->check(CLI::Range(1U, 256U))->capture_default_str();
  area->add_option("--max-n", area_args.max_n, "Largest accepted length")->capture_default_str();

  int n_max = 0;
  auto* verify = app.add_subcommand("verify", "Cross-check formula, oracle, lambda tables and moments");
  verify->add_option("--n-max", n_max, "Largest even length to check (<= 14)")->required();

  KreftArgs kreft_args;
  auto* kreft = app.add_subcommand("kreft", "Kreft coefficient a_{p,q}(2j)");
  kreft->add_option("--p", kreft_args.p)->required();
  kreft->add_option("--q", kreft_args.q)->required();
  kreft->add_option("--j", kreft_args.j)->required();
  kreft->add_option("--mode", kreft_args.mode, "auto | direct | extrapolated | series | closed-form")
      ->check(CLI::IsMember({"auto", "direct", "extrapolated", "series", "closed-form"}))
      ->capture_default_str();
  kreft->add_flag("--all", kreft_args.all, "Run every applicable method and compare");
  kreft->add_option("--format", kreft_args.format, "table | json")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();

  TraceArgs trace_args;
  auto* trace = app.add_subcommand("trace", "Per-site moment Tr H^n at flux p/q");
  trace->add_option("--n", trace_args.n)->required();
  trace->add_option("--p", trace_args.p)->required();
  trace->add_option("--q", trace_args.q)->required();
  trace->add_option("--method", trace_args.method, "formula | partition | matrix | areas | first-order | all")
      ->check(CLI::IsMember({"formula", "partition", "matrix", "areas", "first-order", "all"}))
      ->capture_default_str();
  trace->add_option("--format", trace_args.format, "table | json")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();

  LambdaArgs lambda_args;
  auto* lambda = app.add_subcommand("lambda", "Area counts resolved by the number m of right steps");
  lambda->add_option("--n", lambda_args.n, "Walk length (even)")->required();
  lambda->add_option("--format", lambda_args.format, "table | csv | json")
      ->check(CLI::IsMember(table_formats))
      ->capture_default_str();
  lambda->add_option("--threads", lambda_args.threads, "Worker threads")->check(CLI::Range(1U, 256U))->capture_default_str();
  lambda->add_option("--max-n", lambda_args.max_n, "Largest accepted length")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (area->parsed()) return cmd_area(area_args, out);
    if (verify->parsed()) return cmd_verify(n_max, out, err);
    if (kreft->parsed()) return cmd_kreft(kreft_args, out);
    if (trace->parsed()) return cmd_trace(trace_args, out);
    if (lambda->parsed()) return cmd_lambda(lambda_args, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace areawalk::cli
