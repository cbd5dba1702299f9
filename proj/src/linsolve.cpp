#include "invpow/linsolve.hpp"

#include <stdexcept>
#include <utility>

namespace invpow {

IntMatrix IntMatrix::identity(long n) {
  IntMatrix out(n, n);
  for (long i = 0; i < n; ++i)
    out(i, i) = 1;
  return out;
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix shapes do not match");
  IntMatrix out(a.rows(), b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0)
        continue;
      for (long j = 0; j < b.cols(); ++j)
        out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

namespace {

void swap_rows(IntMatrix &m, long r1, long r2) {
  for (long j = 0; j < m.cols(); ++j)
    std::swap(m(r1, j), m(r2, j));
}

// In-place Bareiss reduction of the leading n x n block (n = m.rows()).
// Returns +1/-1 for the row-swap parity, 0 if the block is singular.
int bareiss(IntMatrix &m) {
  const long n = m.rows();
  int parity = 1;
  mpz_class prev = 1;
  for (long k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      long p = k + 1;
      while (p < n && m(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      swap_rows(m, k, p);
      parity = -parity;
    }
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < m.cols(); ++j) {
        mpz_class t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return parity;
}

} // namespace

mpz_class determinant_bareiss(IntMatrix a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("determinant of a non-square matrix");
  if (a.rows() == 0)
    return 1;
  const int parity = bareiss(a);
  return parity * a(a.rows() - 1, a.rows() - 1);
}

std::vector<mpq_class> solve_fraction_free(const IntMatrix &a, std::span<const mpq_class> b) {
  const long n = a.rows();
  if (a.cols() != n || static_cast<long>(b.size()) != n)
    throw std::invalid_argument("linear system shape mismatch");

  mpz_class scale = 1;
  for (const auto &v : b)
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());

  IntMatrix aug(n, n + 1);
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j)
      aug(i, j) = a(i, j);
    mpq_class scaled = b[static_cast<size_t>(i)] * scale;
    aug(i, n) = scaled.get_num(); // integral by construction of `scale`
  }
  if (bareiss(aug) == 0)
    throw std::domain_error("singular linear system");

  std::vector<mpq_class> x(static_cast<size_t>(n));
  for (long i = n - 1; i >= 0; --i) {
    mpq_class acc(aug(i, n));
    for (long j = i + 1; j < n; ++j)
      acc -= mpq_class(aug(i, j)) * x[static_cast<size_t>(j)];
    x[static_cast<size_t>(i)] = acc / mpq_class(aug(i, i));
  }
  for (auto &v : x) {
    v /= scale;
    v.canonicalize();
  }
  return x;
}

} // namespace invpow
