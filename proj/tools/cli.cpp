#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "invpow/approximant.hpp"
#include "invpow/asymptotics.hpp"
#include "invpow/binomial.hpp"
#include "invpow/coeff_file.hpp"
#include "invpow/corpus.hpp"
#include "invpow/identities.hpp"

namespace invpow::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Failure that maps to exit code 1 with a one-line diagnostic.
struct OperationalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutputOptions {
  std::string format = "csv";
  std::string out_path;
  int digits = 30;
};

struct SourceOptions {
  std::string corpus;
  std::string params;
  std::string x0 = "1";
  std::string coeffs_path;
  std::string mode = "exact";
  long precision = 64;
};

struct Source {
  TaylorSeries series;
  std::optional<CorpusFunction> function;
  Json description;
};

NumericMode numeric_mode(const SourceOptions &opt) {
  if (opt.mode == "exact")
    return NumericMode::exact_rational();
  if (opt.precision < kMinFloatPrecision)
    throw OperationalError("--precision must be at least 64 bits in float mode");
  return NumericMode::floating(opt.precision);
}

std::vector<Scalar> parse_list(const std::string &text) {
  std::vector<Scalar> out;
  if (text.empty())
    return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(parse_scalar(item));
  return out;
}

std::string radius_text(const std::optional<Scalar> &r) { return r ? r->str() : "inf"; }

/// Resolves --corpus/--coeffs into a series with at least `needed` coefficients.
Source resolve_source(const SourceOptions &opt, long needed) {
  const NumericMode mode = numeric_mode(opt);
  if (opt.corpus.empty() == opt.coeffs_path.empty())
    throw OperationalError("exactly one of --corpus or --coeffs is required");

  Source src;
  if (!opt.corpus.empty()) {
    const auto params = parse_list(opt.params);
    auto f = corpus_function(opt.corpus, params);
    const Scalar x0 = parse_scalar(opt.x0);
    auto exact_series = taylor_coeffs(f, x0, std::max(needed, 1L));
    const auto report = hypothesis_report(f, x0);
    src.description = {{"kind", "corpus"},
                       {"selector", opt.corpus},
                       {"function", f.description()},
                       {"x0", x0.str()},
                       {"hypothesis_radius", radius_text(report.radius)},
                       {"hypothesis_satisfied", report.satisfied}};
    std::vector<Scalar> coeffs;
    for (const auto &c : exact_series.coeffs)
      coeffs.push_back(c.to_mode(mode));
    src.series = TaylorSeries(exact_series.x0.to_mode(mode), std::move(coeffs),
                              exact_series.radius_hint);
    src.function = std::move(f);
    return src;
  }

  TaylorSeries loaded = load_coefficient_file(opt.coeffs_path, mode.exact ? 64 : mode.precision);
  if (mode.exact && !loaded.exact())
    throw OperationalError(opt.coeffs_path + ": file holds float coefficients; use --mode float");
  if (static_cast<long>(loaded.coeffs.size()) < needed)
    throw OperationalError(opt.coeffs_path + ": " + std::to_string(needed) +
                           " coefficients needed, file has " + std::to_string(loaded.coeffs.size()));
  std::vector<Scalar> coeffs;
  for (const auto &c : loaded.coeffs)
    coeffs.push_back(c.to_mode(mode));
  src.description = {{"kind", "file"}, {"path", opt.coeffs_path}, {"x0", render_exact(loaded.x0)}};
  src.series = TaylorSeries(loaded.x0.to_mode(mode), std::move(coeffs), loaded.radius_hint);
  return src;
}

std::optional<std::string> hazard_warning(const SourceOptions &opt, long m) {
  if (opt.mode != "float" || !cancellation_hazard(m, opt.precision))
    return std::nullopt;
  const mpz_class peak = binom(m, m / 2);
  return "float mode at m=" + std::to_string(m) + " with " + std::to_string(opt.precision) +
         "-bit precision: C(" + std::to_string(m) + "," + std::to_string(m / 2) + ") needs " +
         std::to_string(mpz_sizeinbase(peak.get_mpz_t(), 2)) +
         " bits, more than half the working precision; the binomial sums cancel "
         "catastrophically. Use exact mode.";
}

void emit(const OutputOptions &opt, const std::string &text, std::ostream &out) {
  if (opt.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.out_path, std::ios::binary | std::ios::trunc);
  if (!file)
    throw OperationalError(opt.out_path + ": cannot open for writing");
  file << text;
  if (!file)
    throw OperationalError(opt.out_path + ": write failed");
}

// JSON keeps exact rationals; CSV uses the decimal budget. Floats use the
// decimal budget in both, so the two formats agree value for value.
std::string json_scalar(const Scalar &x, int digits) { return render_exact(x, digits); }
std::string csv_scalar(const Scalar &x, int digits) { return render_decimal(x, digits); }

Json opt_json(const std::optional<Scalar> &x, int digits) {
  return x ? Json(json_scalar(*x, digits)) : Json(nullptr);
}
std::string opt_csv(const std::optional<Scalar> &x, int digits) {
  return x ? csv_scalar(*x, digits) : std::string();
}

Json mode_json(const SourceOptions &opt) {
  return {{"mode", opt.mode}, {"precision", opt.mode == "exact" ? Json(nullptr) : Json(opt.precision)}};
}

// ------------------------------------------------------------------ estimate

struct EstimateOptions {
  long m_max = 20;
  std::string tol = "1e-12";
  bool require_converged = false;
};

int cmd_estimate(const SourceOptions &src_opt, const EstimateOptions &opt,
                 const OutputOptions &out_opt, std::ostream &out, std::ostream &err) {
  if (opt.m_max < 0)
    throw OperationalError("--m-max must be non-negative");
  const Source src = resolve_source(src_opt, opt.m_max + 1);
  const Scalar tol = parse_scalar(opt.tol);
  const auto table = convergence_table(src.series, opt.m_max);

  std::optional<AsymptoticEstimate> est;
  if (table.rows.size() >= 3)
    est = estimate_limits(table, tol);
  const bool converged = est && est->converged_q0 && est->converged_q1;

  std::vector<std::string> warnings;
  if (auto w = hazard_warning(src_opt, opt.m_max))
    warnings.push_back(*w);
  if (!est)
    warnings.push_back("fewer than 3 rows; convergence is never claimed");
  for (const auto &w : warnings)
    err << "warning: " << w << "\n";

  const int d = out_opt.digits;
  const auto &last = table.rows.back();
  std::ostringstream text;
  if (out_opt.format == "json") {
    Json rows = Json::array();
    for (const auto &r : table.rows)
      rows.push_back({{"m", r.m},
                      {"q0", json_scalar(r.q0, d)},
                      {"q1", opt_json(r.q1, d)},
                      {"delta0", opt_json(r.delta0, d)},
                      {"delta1", opt_json(r.delta1, d)}});
    Json summary = {{"q0", json_scalar(est ? est->q0 : last.q0, d)},
                    {"q1", est ? Json(json_scalar(est->q1, d)) : opt_json(last.q1, d)},
                    {"converged_q0", est && est->converged_q0},
                    {"converged_q1", est && est->converged_q1},
                    {"m_used", est ? est->m_used : table.m_max()},
                    {"error_indicator_q0", est ? Json(json_scalar(est->error_indicator_q0, d)) : opt_json(last.delta0, d)},
                    {"error_indicator_q1", est ? Json(json_scalar(est->error_indicator_q1, d)) : opt_json(last.delta1, d)}};
    Json doc = {{"command", "estimate"},
                {"source", src.description},
                {"arithmetic", mode_json(src_opt)},
                {"m_max", opt.m_max},
                {"tol", json_scalar(tol, d)},
                {"rows", rows},
                {"summary", summary},
                {"warnings", warnings}};
    text << doc.dump(2) << "\n";
  } else {
    text << "m,q0_m,q1_m,delta0,delta1\n";
    for (const auto &r : table.rows)
      text << r.m << "," << csv_scalar(r.q0, d) << "," << opt_csv(r.q1, d) << ","
           << opt_csv(r.delta0, d) << "," << opt_csv(r.delta1, d) << "\n";
    text << "\nq0,q1,converged_q0,converged_q1,m_used,error_indicator_q0,error_indicator_q1\n";
    if (est)
      text << csv_scalar(est->q0, d) << "," << csv_scalar(est->q1, d) << ","
           << (est->converged_q0 ? "true" : "false") << "," << (est->converged_q1 ? "true" : "false")
           << "," << est->m_used << "," << csv_scalar(est->error_indicator_q0, d) << ","
           << csv_scalar(est->error_indicator_q1, d) << "\n";
    else
      text << csv_scalar(last.q0, d) << "," << opt_csv(last.q1, d) << ",false,false,"
           << table.m_max() << "," << opt_csv(last.delta0, d) << "," << opt_csv(last.delta1, d)
           << "\n";
  }
  emit(out_opt, text.str(), out);
  return (opt.require_converged && !converged) ? kExitNotConverged : kExitOk;
}

// ------------------------------------------------------------------ approximate

struct ApproximateOptions {
  long m = 0;
  std::vector<std::string> eval;
  std::string path = "closed";
};

InversePowerApproximant build(const TaylorSeries &s, long m, const std::string &path) {
  if (path == "closed")
    return coeffs_closed_form(s, m);
  if (path == "matrix")
    return coeffs_via_matrix(s, m);
  if (path == "solve")
    return coeffs_oracle_solve(s, m);
  throw OperationalError("unknown --path '" + path + "'");
}

int cmd_approximate(const SourceOptions &src_opt, const ApproximateOptions &opt,
                    const OutputOptions &out_opt, std::ostream &out, std::ostream &err) {
  if (opt.m < 0)
    throw OperationalError("--m must be non-negative");
  const Source src = resolve_source(src_opt, opt.m + 1);
  const auto approx = build(src.series, opt.m, opt.path);
  if (auto w = hazard_warning(src_opt, opt.m))
    err << "warning: " << *w << "\n";

  const NumericMode mode = numeric_mode(src_opt);
  const int d = out_opt.digits;
  struct Point {
    std::string x_text;
    std::optional<Scalar> x, value, exact_value, residual;
    std::string error;
  };
  std::vector<Point> points;
  size_t failures = 0;
  for (const auto &raw : opt.eval) {
    Point p;
    p.x_text = raw;
    try {
      p.x = parse_scalar(raw, mode);
    } catch (const std::exception &e) {
      p.error = std::string("parse: ") + e.what();
    }
    if (p.x) {
      try {
        p.value = evaluate(approx, *p.x);
        if (src.function) {
          if (src.function->is_pole(*p.x))
            p.error = "function pole";
          else {
            p.exact_value = (*src.function)(*p.x);
            p.residual = *p.exact_value - *p.value;
          }
        }
      } catch (const std::domain_error &) {
        p.error = "pole";
      }
    }
    if (!p.error.empty())
      ++failures;
    points.push_back(std::move(p));
  }

  const char *note = "only q_0 and q_1 converge to center-independent limits; q_k for k >= 2 "
                     "depends on the expansion center";
  std::ostringstream text;
  if (out_opt.format == "json") {
    Json q = Json::array();
    for (const auto &v : approx.q)
      q.push_back(json_scalar(v, d));
    Json evals = Json::array();
    for (const auto &p : points) {
      Json e = {{"x", p.x ? Json(json_scalar(*p.x, d)) : Json(p.x_text)}};
      if (p.value)
        e["R"] = json_scalar(*p.value, d);
      if (p.exact_value)
        e["f"] = json_scalar(*p.exact_value, d);
      if (p.residual)
        e["residual"] = json_scalar(*p.residual, d);
      if (!p.error.empty())
        e["error"] = p.error;
      evals.push_back(e);
    }
    Json doc = {{"command", "approximate"},
                {"source", src.description},
                {"arithmetic", mode_json(src_opt)},
                {"m", approx.m},
                {"path", opt.path},
                {"x0", json_scalar(approx.x0, d)},
                {"q", q},
                {"note", note},
                {"cancellation_hazard", approx.cancellation_hazard},
                {"evaluations", evals}};
    text << doc.dump(2) << "\n";
  } else {
    text << "k,q_k,role\n";
    for (size_t k = 0; k < approx.q.size(); ++k)
      text << k << "," << csv_scalar(approx.q[k], d) << ","
           << (k < 2 ? "asymptotic" : "center-dependent") << "\n";
    text << "\nx,R,f,residual,error\n";
    for (const auto &p : points)
      text << (p.x ? csv_scalar(*p.x, d) : p.x_text) << "," << opt_csv(p.value, d) << ","
           << opt_csv(p.exact_value, d) << "," << opt_csv(p.residual, d) << "," << p.error << "\n";
  }
  emit(out_opt, text.str(), out);
  for (const auto &p : points)
    if (!p.error.empty())
      err << "error: x=" << p.x_text << ": " << p.error << "\n";
  return (!points.empty() && failures == points.size()) ? kExitFailure : kExitOk;
}

// ------------------------------------------------------------------ verify-identities

struct IdentityOptions {
  IdentityRanges ranges;
  unsigned threads = 0;
};

int cmd_verify(const IdentityOptions &opt, const OutputOptions &out_opt, std::ostream &out,
               std::ostream &err) {
  const unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  const auto report = run_suite(opt.ranges, threads);
  std::ostringstream text;
  if (out_opt.format == "json") {
    text << to_json(report) << "\n";
  } else {
    text << "identity_id,checked\n";
    for (const auto &[id, n] : report.checked_per_identity)
      text << identity_name(id) << "," << n << "\n";
    text << "\ntotal,passed,failed,skipped\n"
         << report.total << "," << report.passed << "," << report.failed << "," << report.skipped
         << "\n";
  }
  emit(out_opt, text.str(), out);
  for (const auto &f : report.failures)
    err << "identity failure: " << to_json(f) << "\n";
  return report.failed == 0 ? kExitOk : kExitFailure;
}

// ------------------------------------------------------------------ corpus

struct CorpusOptions {
  std::string fn;
  std::string params;
  std::string x0 = "1";
  long n = 50;
};

int cmd_corpus(const CorpusOptions &opt, const OutputOptions &out_opt, std::ostream &out) {
  if (opt.n < 1)
    throw OperationalError("--n must be at least 1");
  const auto params = parse_list(opt.params);
  const auto f = corpus_function(opt.fn, params);
  const Scalar x0 = parse_scalar(opt.x0);
  const auto series = taylor_coeffs(f, x0, opt.n);
  const auto report = hypothesis_report(f, x0);
  const auto file = make_coefficient_file(series, f.description(), radius_text(report.radius));
  emit(out_opt, format_coefficient_file(file), out);
  return kExitOk;
}

void add_source_options(CLI::App *cmd, SourceOptions &src) {
  cmd->add_option("--corpus", src.corpus, "Corpus function selector");
  cmd->add_option("--params", src.params, "Comma-separated corpus parameters");
  cmd->add_option("--x0", src.x0, "Expansion center for corpus functions");
  cmd->add_option("--coeffs", src.coeffs_path, "Coefficient file (JSON)");
  cmd->add_option("--mode", src.mode, "Arithmetic: exact or float")
      ->check(CLI::IsMember({"exact", "float"}));
  cmd->add_option("--precision", src.precision, "Float mantissa bits (float mode, >= 64)");
}

void add_output_options(CLI::App *cmd, OutputOptions &o, bool csv_default) {
  o.format = csv_default ? "csv" : "json";
  cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out_path, "Output file (default: standard output)");
  cmd->add_option("--digits", o.digits, "Significant digits for decimal output")
      ->check(CLI::Range(1, 10000));
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Two-term asymptotics of a function from its Taylor coefficients", "invpow"};
  app.require_subcommand(1);

  SourceOptions est_src, app_src;
  OutputOptions est_out, app_out, ver_out, cor_out;
  EstimateOptions est_opt;
  ApproximateOptions app_opt;
  IdentityOptions ver_opt;
  CorpusOptions cor_opt;

  auto *estimate = app.add_subcommand("estimate", "Convergence table of q0_m, q1_m and limit estimates");
  add_source_options(estimate, est_src);
  add_output_options(estimate, est_out, true);
  estimate->add_option("--m-max", est_opt.m_max, "Largest dimension m");
  estimate->add_option("--tol", est_opt.tol, "Convergence tolerance on the last two deltas");
  estimate->add_flag("--require-converged", est_opt.require_converged,
                     "Exit with status 2 unless both q0 and q1 converged");

  auto *approximate = app.add_subcommand("approximate", "Inverse-power approximant of dimension m");
  add_source_options(approximate, app_src);
  add_output_options(approximate, app_out, false);
  approximate->add_option("--m", app_opt.m, "Approximant dimension")->required();
  approximate->add_option("--eval", app_opt.eval, "Evaluation points")->delimiter(',');
  approximate->add_option("--path", app_opt.path, "closed, matrix or solve")
      ->check(CLI::IsMember({"closed", "matrix", "solve"}));

  auto *verify = app.add_subcommand("verify-identities", "Exhaustive binomial identity suite");
  add_output_options(verify, ver_out, false);
  verify->add_option("--m-min", ver_opt.ranges.m_min)->check(CLI::NonNegativeNumber);
  verify->add_option("--m-max", ver_opt.ranges.m_max)->check(CLI::NonNegativeNumber);
  verify->add_option("--k-min", ver_opt.ranges.k_min)->check(CLI::NonNegativeNumber);
  verify->add_option("--k-max", ver_opt.ranges.k_max)->check(CLI::NonNegativeNumber);
  verify->add_option("--threads", ver_opt.threads, "Worker threads (0: hardware concurrency)");

  auto *corpus = app.add_subcommand("corpus", "Write exact Taylor coefficients of a corpus function");
  add_output_options(corpus, cor_out, false);
  corpus->add_option("--fn", cor_opt.fn, "Corpus function selector")->required();
  corpus->add_option("--params", cor_opt.params, "Comma-separated parameters");
  corpus->add_option("--x0", cor_opt.x0, "Expansion center");
  corpus->add_option("--n", cor_opt.n, "Number of coefficients");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitFailure;
  }

  try {
    if (estimate->parsed())
      return cmd_estimate(est_src, est_opt, est_out, out, err);
    if (approximate->parsed())
      return cmd_approximate(app_src, app_opt, app_out, out, err);
    if (verify->parsed())
      return cmd_verify(ver_opt, ver_out, out, err);
    if (corpus->parsed())
      return cmd_corpus(cor_opt, cor_out, out);
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}

} // namespace invpow::cli
