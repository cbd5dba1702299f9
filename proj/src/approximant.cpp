#include "invpow/approximant.hpp"

#include <algorithm>
#include <stdexcept>

#include "invpow/binomial.hpp"
#include "invpow/transforms.hpp"

namespace invpow {

namespace {

const Scalar &coeff(const TaylorSeries &s, long n) { return s.coeffs[static_cast<size_t>(n)]; }

mpfr_prec_t working_precision(const TaylorSeries &series, long m) {
  mpfr_prec_t bits = series.x0.precision();
  for (long n = 0; n <= m; ++n)
    bits = std::max(bits, coeff(series, n).precision());
  return bits;
}

InversePowerApproximant make(const TaylorSeries &series, long m, std::vector<Scalar> q) {
  InversePowerApproximant out{m, series.x0, std::move(q), false};
  const mpfr_prec_t bits = working_precision(series, m);
  out.cancellation_hazard = bits > 0 && cancellation_hazard(m, bits);
  return out;
}

} // namespace

bool InversePowerApproximant::exact() const {
  return x0.exact() && std::all_of(q.begin(), q.end(), [](const Scalar &v) { return v.exact(); });
}

SignedBinomialMatrix::SignedBinomialMatrix(long m) : m_(m) {
  if (m < 0)
    throw std::invalid_argument("matrix dimension must be non-negative");
  entries_ = IntMatrix(m + 1, m + 1);
  for (long i = 0; i <= m; ++i)
    for (long j = i; j <= m; ++j)
      entries_(i, j) = (i % 2 == 0) ? binom(j, i) : mpz_class(-binom(j, i));
}

bool SignedBinomialMatrix::upper_triangular() const {
  for (long i = 1; i <= m_; ++i)
    for (long j = 0; j < i; ++j)
      if (entries_(i, j) != 0)
        return false;
  return true;
}

mpz_class SignedBinomialMatrix::diagonal_product() const {
  mpz_class p = 1;
  for (long i = 0; i <= m_; ++i)
    p *= entries_(i, i);
  return p;
}

SignedBinomialMatrix build_matrix_A(long m) { return SignedBinomialMatrix(m); }

bool cancellation_hazard(long m, mpfr_prec_t bits) {
  if (m < 0)
    return false;
  const mpz_class peak = binom(m, m / 2);
  return static_cast<mpfr_prec_t>(mpz_sizeinbase(peak.get_mpz_t(), 2)) > bits / 2;
}

Scalar zero_term_coefficient(const TaylorSeries &series, long m) {
  series.require_dimension(m);
  Scalar sum;
  for (long s = 0; s <= m; ++s)
    sum += Scalar(binom(m, s)) * coeff(series, s);
  return sum;
}

Scalar first_term_coefficient(const TaylorSeries &series, long m) {
  series.require_dimension(m);
  Scalar sum;
  for (long s = 1; s <= m; ++s)
    sum += Scalar(mpz_class(m * binom(m, s) - binom(m, s + 1))) * coeff(series, s);
  return -sum;
}

InversePowerApproximant coeffs_closed_form(const TaylorSeries &series, long m) {
  series.require_dimension(m);
  std::vector<Scalar> q;
  q.reserve(static_cast<size_t>(m + 1));
  q.push_back(zero_term_coefficient(series, m));
  if (m >= 1)
    q.push_back(first_term_coefficient(series, m));
  for (long k = 2; k <= m; ++k) {
    // Inner binomial sums are integers; fold them before touching c_s.
    Scalar sum;
    for (long s = 1; s <= m; ++s) {
      mpz_class weight = 0;
      for (long n = 0; n <= k; ++n) {
        mpz_class t = binom(m - n, k - n) * binom(m, s + n);
        if (n % 2 == 0)
          weight += t;
        else
          weight -= t;
      }
      if (weight != 0)
        sum += Scalar(weight) * coeff(series, s);
    }
    q.push_back(k % 2 == 0 ? sum : -sum);
  }
  return make(series, m, std::move(q));
}

InversePowerApproximant coeffs_via_matrix(const TaylorSeries &series, long m) {
  const auto convolved = binomial_convolve(series, m);
  const auto a = build_matrix_A(m);
  std::vector<Scalar> q;
  q.reserve(static_cast<size_t>(m + 1));
  for (long k = 0; k <= m; ++k) {
    Scalar sum;
    for (long n = k; n <= m; ++n)
      sum += Scalar(a(k, n)) * convolved.values[static_cast<size_t>(n)];
    q.push_back(std::move(sum));
  }
  return make(series, m, std::move(q));
}

InversePowerApproximant coeffs_oracle_solve(const TaylorSeries &series, long m) {
  series.require_dimension(m);
  if (!series.exact())
    throw std::invalid_argument("the linear-solve path requires exact coefficients");
  IntMatrix system(m + 1, m + 1);
  std::vector<mpq_class> rhs;
  rhs.reserve(static_cast<size_t>(m + 1));
  for (long k = 0; k <= m; ++k)
    system(0, k) = 1;
  rhs.push_back(coeff(series, 0).rational());
  for (long n = 1; n <= m; ++n) {
    for (long k = 1; k <= m; ++k) {
      mpz_class v = binom(k + n - 1, n);
      system(n, k) = (n % 2 == 0) ? v : mpz_class(-v);
    }
    rhs.push_back(coeff(series, n).rational());
  }
  const auto solution = solve_fraction_free(system, rhs);
  std::vector<Scalar> q;
  q.reserve(solution.size());
  for (const auto &v : solution)
    q.emplace_back(v);
  return InversePowerApproximant{m, series.x0, std::move(q), false};
}

Scalar evaluate(const InversePowerApproximant &approx, const Scalar &x) {
  const Scalar t = x - approx.x0 + Scalar(1);
  if (t.is_zero())
    throw std::domain_error("approximant evaluated at its pole x = x0 - 1");
  if (approx.m == 0)
    return approx.q[0];
  const Scalar u = Scalar(1) / t;
  Scalar acc = approx.q[static_cast<size_t>(approx.m)];
  for (long k = approx.m - 1; k >= 1; --k)
    acc = acc * u + approx.q[static_cast<size_t>(k)];
  return approx.q[0] + acc * u;
}

TaylorSeries expand_to_taylor(const InversePowerApproximant &approx, long n_terms) {
  if (n_terms < 1)
    throw std::invalid_argument("expansion needs at least one term");
  std::vector<Scalar> c;
  c.reserve(static_cast<size_t>(n_terms));
  Scalar c0;
  for (const auto &v : approx.q)
    c0 += v;
  c.push_back(std::move(c0));
  for (long n = 1; n < n_terms; ++n) {
    Scalar sum;
    for (long k = 1; k <= approx.m; ++k)
      sum += Scalar(binom(k + n - 1, n)) * approx.q[static_cast<size_t>(k)];
    c.push_back(n % 2 == 0 ? sum : -sum);
  }
  return TaylorSeries(approx.x0, std::move(c));
}

} // namespace invpow
