#ifndef INVPOW_BINOMIAL_HPP
#define INVPOW_BINOMIAL_HPP

#include <deque>
#include <shared_mutex>
#include <vector>

#include <gmpxx.h>

namespace invpow {

/// C(a, b) by the multiplicative formula. Zero when b < 0 or b > a.
/// Throws std::domain_error for a < 0.
mpz_class binom(long a, long b);

/// Pascal's triangle, grown one full row at a time.
///
/// Rows are only ever appended and are published complete, so references
/// returned by row() stay valid and readers never see a partial row.
/// Safe to share between threads.
class PascalCache {
public:
  const std::vector<mpz_class> &row(long a) const;
  /// Same contract as binom().
  mpz_class get(long a, long b) const;
  long rows_cached() const;

private:
  mutable std::shared_mutex mutex_;
  mutable std::deque<std::vector<mpz_class>> rows_;
};

/// Process-wide cache used by the identity suites.
PascalCache &shared_pascal();

} // namespace invpow

#endif
