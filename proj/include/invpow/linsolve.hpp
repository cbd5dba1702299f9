#ifndef INVPOW_LINSOLVE_HPP
#define INVPOW_LINSOLVE_HPP

#include <span>
#include <vector>

#include <gmpxx.h>

namespace invpow {

/// Dense row-major integer matrix.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(long rows, long cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows * cols)) {}

  static IntMatrix identity(long n);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  mpz_class &operator()(long i, long j) { return data_[static_cast<size_t>(i * cols_ + j)]; }
  const mpz_class &operator()(long i, long j) const { return data_[static_cast<size_t>(i * cols_ + j)]; }

  friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
  friend bool operator==(const IntMatrix &a, const IntMatrix &b) = default;

private:
  long rows_ = 0;
  long cols_ = 0;
  std::vector<mpz_class> data_;
};

/// Determinant by Bareiss fraction-free elimination. Pivots are chosen
/// structurally (first nonzero entry in the column), never by magnitude.
mpz_class determinant_bareiss(IntMatrix a);

/// Solves a x = b exactly for square nonsingular integer `a` and rational `b`.
/// The right-hand side is cleared of denominators, the augmented system is
/// reduced by Bareiss elimination, then back-substituted over the rationals.
/// Throws std::invalid_argument on shape mismatch, std::domain_error when singular.
std::vector<mpq_class> solve_fraction_free(const IntMatrix &a, std::span<const mpq_class> b);

} // namespace invpow

#endif
