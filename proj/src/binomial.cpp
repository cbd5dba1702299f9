#include "invpow/binomial.hpp"

#include <mutex>
#include <stdexcept>

namespace invpow {

mpz_class binom(long a, long b) {
  if (a < 0)
    throw std::domain_error("binomial coefficient with negative upper index");
  if (b < 0 || b > a)
    return 0;
  if (b > a - b)
    b = a - b;
  mpz_class r = 1;
  // r stays integral: after step i it equals C(a - b + i, i).
  for (long i = 1; i <= b; ++i) {
    r *= a - b + i;
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return r;
}

const std::vector<mpz_class> &PascalCache::row(long a) const {
  if (a < 0)
    throw std::domain_error("binomial coefficient with negative upper index");
  {
    std::shared_lock lock(mutex_);
    if (a < static_cast<long>(rows_.size()))
      return rows_[static_cast<size_t>(a)];
  }
  std::unique_lock lock(mutex_);
  if (rows_.empty())
    rows_.push_back({mpz_class(1)});
  while (static_cast<long>(rows_.size()) <= a) {
    const auto &prev = rows_.back();
    std::vector<mpz_class> next(prev.size() + 1);
    next.front() = 1;
    next.back() = 1;
    for (size_t j = 1; j + 1 < next.size(); ++j)
      next[j] = prev[j - 1] + prev[j];
    rows_.push_back(std::move(next));
  }
  return rows_[static_cast<size_t>(a)];
}

mpz_class PascalCache::get(long a, long b) const {
  const auto &r = row(a);
  if (b < 0 || b > a)
    return 0;
  return r[static_cast<size_t>(b)];
}

long PascalCache::rows_cached() const {
  std::shared_lock lock(mutex_);
  return static_cast<long>(rows_.size());
}

PascalCache &shared_pascal() {
  static PascalCache cache;
  return cache;
}

} // namespace invpow
