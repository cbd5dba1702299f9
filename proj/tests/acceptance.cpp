// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "cli.hpp"
#include "invpow/approximant.hpp"
#include "invpow/asymptotics.hpp"
#include "invpow/corpus.hpp"
#include "invpow/identities.hpp"
#include "oracle.hpp"

using namespace invpow;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::vector<oracle::NaiveFraction> naive(const TaylorSeries &s) {
  std::vector<oracle::NaiveFraction> out;
  for (const auto &c : s.coeffs)
    out.push_back(oracle::to_naive(c.rational()));
  return out;
}

Outcome identity_suite() {
  const auto start = std::chrono::steady_clock::now();
  const auto report = run_suite(IdentityRanges{0, 25, 0, 25}, std::max(1u, std::thread::hardware_concurrency()));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool all_ids = true;
  for (auto id : kAllIdentities)
    all_ids = all_ids && report.checked_per_identity.count(id) && report.checked_per_identity.at(id) > 0;
  return {report.failed == 0 && all_ids && seconds < 60,
          std::to_string(report.total) + " tuples, " + std::to_string(report.failed) + " failed, " +
              std::to_string(report.skipped) + " skipped, " + fmt(seconds) + " s"};
}

Outcome matrix_laws() {
  long bad = 0;
  for (long m = 0; m <= 50; ++m) {
    const auto a = build_matrix_A(m);
    if (!(a.entries() * a.entries() == IntMatrix::identity(m + 1)))
      ++bad;
  }
  for (long m = 0; m <= 30; ++m) {
    const auto a = build_matrix_A(m);
    const mpz_class expected = ((m + 1) / 2) % 2 == 0 ? 1 : -1; // number of odd i in [0, m]
    if (!a.upper_triangular() || a.diagonal_product() != expected || determinant_bareiss(a.entries()) != expected)
      ++bad;
  }
  return {bad == 0, "A*A = I for m <= 50, det A = prod (-1)^i for m <= 30; " + std::to_string(bad) + " violations"};
}

Outcome triple_agreement() {
  std::mt19937_64 rng(20261018);
  long checked = 0, bad = 0;
  for (long m = 0; m <= 12; ++m)
    for (int trial = 0; trial < 100; ++trial) {
      const TaylorSeries s(Scalar(oracle::random_rational(rng)), oracle::random_scalars(rng, m + 1));
      const auto a = coeffs_closed_form(s, m).q;
      if (a != coeffs_via_matrix(s, m).q || a != coeffs_oracle_solve(s, m).q)
        ++bad;
      ++checked;
    }
  return {bad == 0, std::to_string(checked) + " random series, " + std::to_string(bad) + " disagreements"};
}

Outcome round_trip() {
  std::mt19937_64 rng(918);
  long checked = 0, bad = 0;
  for (long m = 0; m <= 12; ++m)
    for (int trial = 0; trial < 100; ++trial) {
      const TaylorSeries s(Scalar(oracle::random_rational(rng)), oracle::random_scalars(rng, m + 1));
      for (const auto &approx : {coeffs_closed_form(s, m), coeffs_via_matrix(s, m), coeffs_oracle_solve(s, m)}) {
        if (expand_to_taylor(approx, m + 1).coeffs != s.coeffs)
          ++bad;
        ++checked;
      }
    }
  return {bad == 0, std::to_string(checked) + " approximants, " + std::to_string(bad) + " mismatches"};
}

Outcome convergence_quarter() {
  const auto series = taylor_coeffs(corpus_function("reciprocal-quarter"), Scalar(1), 21);
  const auto c = naive(series);
  const oracle::Binomials C(30);
  const auto table = convergence_table(series, 20);
  long bad = 0;
  for (long m = 1; m <= 20; ++m) {
    const auto b0 = oracle::brute_q0(c, m, C), b1 = oracle::brute_q1(c, m, C);
    const Scalar p = pow(Scalar(5), m + 1);
    const Scalar closed0 = Scalar(4) / p, closed1 = Scalar(1) - Scalar(4 * m + 5) / p;
    // The brute-force sums must reproduce the closed forms before the
    // pipeline is compared against them.
    if (!b0.equals(closed0) || !b1.equals(closed1))
      ++bad;
    if (table.rows[m].q0 != closed0 || *table.rows[m].q1 != closed1)
      ++bad;
  }
  const auto est = estimate_limits(table, parse_scalar("1e-12"));
  const Scalar e0 = abs(est.q0), e1 = abs(est.q1 - Scalar(1));
  const Scalar tol = parse_scalar("1e-12");
  return {bad == 0 && e0 <= tol && e1 <= tol,
          std::to_string(bad) + " closed-form mismatches for m <= 20; |q0 - 0| = " + fmt(e0.to_double()) +
              ", |q1 - 1| = " + fmt(e1.to_double())};
}

Outcome convergence_x_over_x_plus_1() {
  const auto series = taylor_coeffs(corpus_function("x-over-x-plus-1"), Scalar(1), 31);
  const auto c = naive(series);
  const oracle::Binomials C(40);
  const auto table = convergence_table(series, 30);
  long bad = 0;
  for (long m = 0; m <= 30; ++m) {
    const Scalar closed = Scalar(1) - pow(Scalar(2), -(m + 1));
    if (!oracle::brute_q0(c, m, C).equals(closed) || table.rows[m].q0 != closed)
      ++bad;
    if (m >= 1 && !oracle::brute_q1(c, m, C).equals(*table.rows[m].q1))
      ++bad;
  }
  const Scalar e1 = abs(*table.rows[30].q1 + Scalar(1));
  return {bad == 0 && e1 <= parse_scalar("1e-6"),
          std::to_string(bad) + " mismatches for m <= 30; |q1_30 + 1| = " + fmt(e1.to_double())};
}

Outcome center_invariance() {
  const Scalar tol = parse_scalar("1e-6");
  const auto inv = center_invariance_check(corpus_function("one-over-x"), Scalar(1), Scalar::ratio(5, 4), 30, tol);
  const auto mob = center_invariance_check(corpus_function("mobius-2-3-1-2"), Scalar(1), Scalar::ratio(3, 2), 30, tol);
  bool exact_from_two = true;
  for (long m = 2; m <= 30; ++m)
    exact_from_two = exact_from_two && inv.table_a.rows[m].q0 == Scalar(0) && *inv.table_a.rows[m].q1 == Scalar(1);
  return {inv.agree && mob.agree && exact_from_two,
          "1/x gaps " + fmt(inv.q0_gap.to_double()) + ", " + fmt(inv.q1_gap.to_double()) +
              (exact_from_two ? " (exact at x0=1 from m=2)" : " (x0=1 NOT exact)") + "; (2x+3)/(x+2) gaps " +
              fmt(mob.q0_gap.to_double()) + ", " + fmt(mob.q1_gap.to_double()) + " (tol 1e-6)"};
}

Outcome residual_bound(std::string &info) {
  const auto grid = dyadic_grid(4, 20);
  bool all = true;
  std::string detail;
  for (const auto &e : default_corpus()) {
    const auto [q0, q1] = known_asymptote(e.function);
    const auto scan = asymptotic_residual_scan(e.function, q0, q1, grid);
    all = all && scan.bounded && scan.reference_x == pow(Scalar(2), 10);
    detail += e.name + (scan.bounded ? " ok" : " GROWS") + "; ";

    const auto table = convergence_table(taylor_coeffs(e.function, e.x0, 201), 200);
    const auto est = estimate_limits(table, parse_scalar("1e-12"));
    const auto est_scan = asymptotic_residual_scan(e.function, est, grid);
    info += e.name + (est_scan.bounded ? " bounded" : " unbounded") + "; ";
  }
  return {all, detail};
}

Outcome float_honesty(std::string &info) {
  const auto f = corpus_function("x-over-x-plus-1");
  const auto exact_series = taylor_coeffs(f, Scalar(1), 61);
  std::vector<Scalar> fc;
  for (const auto &c : exact_series.coeffs)
    fc.push_back(c.to_float(64));
  const TaylorSeries float_series(Scalar(1).to_float(64), fc);
  const auto exact_table = convergence_table(exact_series, 60);
  const Scalar exact_q0 = exact_table.rows[60].q0;
  const Scalar exact_delta = *exact_table.rows[60].delta0;
  const auto approx = coeffs_closed_form(float_series, 60);
  const Scalar deviation = abs(approx.q[0] - exact_q0);
  info = "matrix-path float q0 deviation " + fmt(abs(coeffs_via_matrix(float_series, 60).q[0] - exact_q0).to_double());

  std::ostringstream out, err;
  const int code = cli::run({"estimate", "--corpus", "x-over-x-plus-1", "--m-max", "60", "--mode", "float",
                             "--precision", "64"},
                            out, err);
  const bool warned = code == 0 && err.str().find("warning:") != std::string::npos && approx.cancellation_hazard;
  const bool deviates = deviation > exact_delta;
  return {warned && deviates, "float deviation " + fmt(deviation.to_double()) + " vs exact delta " +
                                  fmt(exact_delta.to_double()) + (deviates ? " (exceeds)" : " (does not exceed)") +
                                  "; warning " + (warned ? "emitted" : "missing")};
}

Outcome determinism() {
  const std::vector<std::string> args = {"estimate", "--corpus", "mobius-2-3-1-2", "--x0", "3/2", "--m-max", "40",
                                         "--format", "csv"};
  std::ostringstream a, b, ea, eb;
  const int ca = cli::run(args, a, ea), cb = cli::run(args, b, eb);
  const bool same = ca == 0 && cb == 0 && a.str() == b.str() && !a.str().empty();
  return {same, std::to_string(a.str().size()) + " bytes, " + (same ? "identical" : "different")};
}

} // namespace

int main() {
  int failures = 0;
  auto report = [&](int n, const char *name, const Outcome &o) {
    std::printf("[%s] %2d %s: %s\n", o.pass ? "PASS" : "FAIL", n, name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass)
      ++failures;
  };
  report(1, "identity suite m,k <= 25", identity_suite());
  report(2, "matrix involution and determinant", matrix_laws());
  report(3, "three coefficient paths agree", triple_agreement());
  report(4, "Taylor round trip", round_trip());
  report(5, "1/(x+1/4) closed forms and limits", convergence_quarter());
  report(6, "x/(x+1) closed forms and limits", convergence_x_over_x_plus_1());
  report(7, "center invariance at m=30", center_invariance());
  std::string scan_info;
  report(8, "x^2 remainder bounded on 2^4..2^20", residual_bound(scan_info));
  std::printf("[INFO]  8 remainder with m=200 estimates instead of exact limits: %s\n", scan_info.c_str());
  std::string float_info;
  report(9, "float mode at m=60 deviates and warns", float_honesty(float_info));
  std::printf("[INFO]  9 %s\n", float_info.c_str());
  report(10, "estimate output is byte-identical", determinism());
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
