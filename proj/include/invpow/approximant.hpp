#ifndef INVPOW_APPROXIMANT_HPP
#define INVPOW_APPROXIMANT_HPP

#include <vector>

#include "invpow/linsolve.hpp"
#include "invpow/scalar.hpp"
#include "invpow/series.hpp"

namespace invpow {

/// R(x) = q_0 + sum_{k=1}^m q_k / (x - x0 + 1)^k, matched to the first m+1
/// Taylor coefficients of the source function at x0.
///
/// Only q_0 and q_1 approach center-independent limits as m grows. q_k for
/// k >= 2 depends on x0 and must not be read as an asymptotic coefficient.
struct InversePowerApproximant {
  long m = 0;
  Scalar x0;
  std::vector<Scalar> q;
  /// Set for float-mode builds whose binomial weights eat more than half of
  /// the working precision.
  bool cancellation_hazard = false;

  bool exact() const;
};

/// a_{i,j} = (-1)^i C(j, i), 0 <= i, j <= m. Upper triangular and involutory.
class SignedBinomialMatrix {
public:
  explicit SignedBinomialMatrix(long m);

  long dimension() const { return m_; }
  const mpz_class &operator()(long i, long j) const { return entries_(i, j); }
  const IntMatrix &entries() const { return entries_; }
  bool upper_triangular() const;
  /// Product of the diagonal; equals det A for a triangular matrix.
  mpz_class diagonal_product() const;

private:
  long m_;
  IntMatrix entries_;
};

/// Throws std::invalid_argument for m < 0.
SignedBinomialMatrix build_matrix_A(long m);

/// q_0 = sum_s C(m,s) c_s
/// q_1 = -sum_{s>=1} c_s (m C(m,s) - C(m,s+1))
/// q_k = (-1)^k sum_{s>=1} c_s sum_{n=0}^k (-1)^n C(m-n, k-n) C(m, s+n),  k >= 2
InversePowerApproximant coeffs_closed_form(const TaylorSeries &series, long m);

/// q = A * C^(m), with C^(m) from binomial_convolve().
InversePowerApproximant coeffs_via_matrix(const TaylorSeries &series, long m);

/// Solves the matching conditions
///   c_0 = sum_{k=0}^m q_k,   c_n = (-1)^n sum_{k=1}^m q_k C(k+n-1, n)
/// directly by fraction-free elimination. Exact inputs only.
InversePowerApproximant coeffs_oracle_solve(const TaylorSeries &series, long m);

/// The k = 0 and k = 1 closed forms alone, O(m) each.
Scalar zero_term_coefficient(const TaylorSeries &series, long m);
Scalar first_term_coefficient(const TaylorSeries &series, long m);

/// True when C(m, m/2) needs more than half of `bits` to represent.
bool cancellation_hazard(long m, mpfr_prec_t bits);

/// Throws std::domain_error at the pole x = x0 - 1.
Scalar evaluate(const InversePowerApproximant &approx, const Scalar &x);

/// Taylor coefficients of R about x0, n_terms of them.
TaylorSeries expand_to_taylor(const InversePowerApproximant &approx, long n_terms);

} // namespace invpow

#endif
