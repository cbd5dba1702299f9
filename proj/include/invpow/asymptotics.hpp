#ifndef INVPOW_ASYMPTOTICS_HPP
#define INVPOW_ASYMPTOTICS_HPP

#include <optional>
#include <vector>

#include "invpow/corpus.hpp"
#include "invpow/scalar.hpp"
#include "invpow/series.hpp"

namespace invpow {

/// One dimension m of the convergence table. q1 exists from m = 1, delta0
/// from m = 1 and delta1 from m = 2.
struct ConvergenceRow {
  long m = 0;
  Scalar q0;
  std::optional<Scalar> q1;
  std::optional<Scalar> delta0; // |q0_m - q0_{m-1}|
  std::optional<Scalar> delta1; // |q1_m - q1_{m-1}|
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;

  long m_max() const { return static_cast<long>(rows.size()) - 1; }
};

/// Rows m = 0..m_max of q'_{0,m} and q'_{1,m}. Only the two leading
/// closed forms are evaluated, so the cost is O(m_max^2) binomial products.
/// Throws std::invalid_argument when the series is too short.
ConvergenceTable convergence_table(const TaylorSeries &series, long m_max);

/// Last-row values of a convergence table with a last-delta error indicator.
///
/// A component counts as converged when its last two deltas are both <= tol.
/// The indicator is a heuristic, not an error bound.
struct AsymptoticEstimate {
  Scalar q0;
  Scalar q1;
  Scalar error_indicator_q0;
  Scalar error_indicator_q1;
  bool converged_q0 = false;
  bool converged_q1 = false;
  /// First m at which every converged component had settled (two trailing
  /// deltas within tol, all later ones too); m_max when anything failed.
  long m_used = 0;
};

/// Throws std::invalid_argument for tables with fewer than 3 rows.
AsymptoticEstimate estimate_limits(const ConvergenceTable &table, const Scalar &tol);

struct CenterInvarianceReport {
  Scalar x0_a;
  Scalar x0_b;
  ConvergenceTable table_a;
  ConvergenceTable table_b;
  AsymptoticEstimate estimate_a;
  AsymptoticEstimate estimate_b;
  Scalar q0_gap; // |q0_a - q0_b|
  Scalar q1_gap;
  bool agree = false; // both gaps <= tol
};

/// Expands f about two centers, builds both tables to m_max and compares the
/// q0/q1 estimates. Throws std::domain_error when a center is a pole.
CenterInvarianceReport center_invariance_check(const CorpusFunction &f, const Scalar &x0_a,
                                               const Scalar &x0_b, long m_max, const Scalar &tol);

struct ResidualPoint {
  Scalar x;
  Scalar residual; // x^2 |f(x) - q0 - q1/x|
};

struct ResidualScan {
  std::vector<ResidualPoint> points;
  Scalar reference_x;
  Scalar reference_residual;
  Scalar worst_ratio_bound; // growth_factor * reference_residual
  /// No point at or above reference_x exceeds growth_factor * reference_residual.
  bool bounded = false;
};

/// Tabulates the scaled two-term remainder over `grid` (ascending). The
/// reference point is the smallest grid point >= max(grid) / 2^10, so with a
/// dyadic grid the check covers the top ten octaves.
/// Throws std::domain_error when a grid point is a pole of f,
/// std::invalid_argument for an empty grid.
ResidualScan asymptotic_residual_scan(const CorpusFunction &f, const Scalar &q0, const Scalar &q1,
                                      const std::vector<Scalar> &grid,
                                      const Scalar &growth_factor = Scalar(4));

ResidualScan asymptotic_residual_scan(const CorpusFunction &f, const AsymptoticEstimate &est,
                                      const std::vector<Scalar> &grid,
                                      const Scalar &growth_factor = Scalar(4));

/// 2^lo, 2^(lo+1), ..., 2^hi as exact scalars.
std::vector<Scalar> dyadic_grid(long lo, long hi);

} // namespace invpow

#endif
