#include "invpow/asymptotics.hpp"

#include <stdexcept>

#include "invpow/approximant.hpp"

namespace invpow {

ConvergenceTable convergence_table(const TaylorSeries &series, long m_max) {
  series.require_dimension(m_max);
  ConvergenceTable table;
  table.rows.reserve(static_cast<size_t>(m_max + 1));
  for (long m = 0; m <= m_max; ++m) {
    ConvergenceRow row;
    row.m = m;
    row.q0 = zero_term_coefficient(series, m);
    if (m >= 1) {
      row.q1 = first_term_coefficient(series, m);
      row.delta0 = abs(row.q0 - table.rows.back().q0);
    }
    if (m >= 2)
      row.delta1 = abs(*row.q1 - *table.rows.back().q1);
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace {

struct Settling {
  bool converged = false;
  long since = 0;
};

// Walks the deltas backwards from the last row; converged when the trailing
// run of deltas <= tol has length >= 2. `since` is the row where that run
// first reached length 2.
template <typename Delta>
Settling settle(const ConvergenceTable &table, const Scalar &tol, Delta delta) {
  long run_start = table.m_max() + 1;
  for (long m = table.m_max(); m >= 0; --m) {
    const auto &d = delta(table.rows[static_cast<size_t>(m)]);
    if (!d || *d > tol)
      break;
    run_start = m;
  }
  const long run_length = table.m_max() + 1 - run_start;
  if (run_length < 2)
    return {false, table.m_max()};
  return {true, run_start + 1};
}

} // namespace

AsymptoticEstimate estimate_limits(const ConvergenceTable &table, const Scalar &tol) {
  if (table.rows.size() < 3)
    throw std::invalid_argument("limit estimation needs at least 3 table rows");
  const auto &last = table.rows.back();
  const auto s0 = settle(table, tol, [](const ConvergenceRow &r) -> const auto & { return r.delta0; });
  const auto s1 = settle(table, tol, [](const ConvergenceRow &r) -> const auto & { return r.delta1; });

  AsymptoticEstimate est;
  est.q0 = last.q0;
  est.q1 = *last.q1;
  est.error_indicator_q0 = *last.delta0;
  est.error_indicator_q1 = *last.delta1;
  est.converged_q0 = s0.converged;
  est.converged_q1 = s1.converged;
  est.m_used = (s0.converged && s1.converged) ? std::max(s0.since, s1.since) : table.m_max();
  return est;
}

CenterInvarianceReport center_invariance_check(const CorpusFunction &f, const Scalar &x0_a,
                                               const Scalar &x0_b, long m_max, const Scalar &tol) {
  CenterInvarianceReport r;
  r.x0_a = x0_a;
  r.x0_b = x0_b;
  r.table_a = convergence_table(taylor_coeffs(f, x0_a, m_max + 1), m_max);
  r.table_b = convergence_table(taylor_coeffs(f, x0_b, m_max + 1), m_max);
  r.estimate_a = estimate_limits(r.table_a, tol);
  r.estimate_b = estimate_limits(r.table_b, tol);
  r.q0_gap = abs(r.estimate_a.q0 - r.estimate_b.q0);
  r.q1_gap = abs(r.estimate_a.q1 - r.estimate_b.q1);
  r.agree = r.q0_gap <= tol && r.q1_gap <= tol;
  return r;
}

ResidualScan asymptotic_residual_scan(const CorpusFunction &f, const Scalar &q0, const Scalar &q1,
                                      const std::vector<Scalar> &grid,
                                      const Scalar &growth_factor) {
  if (grid.empty())
    throw std::invalid_argument("residual scan needs at least one grid point");
  ResidualScan scan;
  scan.points.reserve(grid.size());
  for (const auto &x : grid) {
    if (x.is_zero())
      throw std::domain_error("residual scan grid contains x = 0");
    const Scalar remainder = f(x) - q0 - q1 / x;
    scan.points.push_back({x, abs(remainder) * x * x});
  }

  const Scalar threshold = grid.back() / Scalar(1024);
  size_t ref = 0;
  while (ref + 1 < scan.points.size() && scan.points[ref].x < threshold)
    ++ref;
  scan.reference_x = scan.points[ref].x;
  scan.reference_residual = scan.points[ref].residual;
  scan.worst_ratio_bound = growth_factor * scan.reference_residual;
  scan.bounded = true;
  for (size_t i = ref; i < scan.points.size(); ++i)
    if (scan.points[i].residual > scan.worst_ratio_bound)
      scan.bounded = false;
  return scan;
}

ResidualScan asymptotic_residual_scan(const CorpusFunction &f, const AsymptoticEstimate &est,
                                      const std::vector<Scalar> &grid,
                                      const Scalar &growth_factor) {
  return asymptotic_residual_scan(f, est.q0, est.q1, grid, growth_factor);
}

std::vector<Scalar> dyadic_grid(long lo, long hi) {
  std::vector<Scalar> grid;
  for (long e = lo; e <= hi; ++e)
    grid.push_back(pow(Scalar(2), e));
  return grid;
}

} // namespace invpow
