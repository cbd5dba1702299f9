#include "invpow/transforms.hpp"

#include <algorithm>
#include <stdexcept>

#include "invpow/binomial.hpp"

namespace invpow {

CountableSet::CountableSet(std::vector<Scalar> elements) : elements_(std::move(elements)) {
  while (!elements_.empty() && elements_.back().is_zero())
    elements_.pop_back();
}

Scalar CountableSet::operator[](long i) const {
  if (i < 0 || i >= effective_length())
    return Scalar(0);
  return elements_[static_cast<size_t>(i)];
}

CountableSet operator+(const CountableSet &a, const CountableSet &b) {
  const long n = std::max(a.effective_length(), b.effective_length());
  std::vector<Scalar> out;
  out.reserve(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i)
    out.push_back(a[i] + b[i]);
  return CountableSet(std::move(out));
}

CountableSet transform_k(const CountableSet &r, long k) {
  if (k < 1)
    throw std::invalid_argument("transformation order must be at least 1");
  const long n = r.effective_length() + 1;
  std::vector<Scalar> out;
  out.reserve(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i)
    out.push_back(i <= k ? r[i] : r[i] + r[i - 1]);
  return CountableSet(std::move(out));
}

CountableSet sequential_transform(const CountableSet &r, long m) {
  if (m < 1)
    throw std::invalid_argument("sequential transformation order must be at least 1");
  CountableSet out = r;
  for (long k = 1; k <= m; ++k)
    out = transform_k(out, k);
  return out;
}

CountableSet sequential_transform_closed(const CountableSet &r, long m) {
  if (m < 1)
    throw std::invalid_argument("sequential transformation order must be at least 1");
  const long n = r.effective_length() + m;
  std::vector<Scalar> out;
  out.reserve(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i) {
    if (i == 0) {
      out.push_back(r[0]);
      continue;
    }
    const long upper = i <= m + 1 ? i - 1 : m;
    Scalar sum;
    for (long s = 0; s <= upper; ++s) {
      const Scalar term = r[i - s];
      if (!term.is_zero())
        sum += Scalar(binom(upper, s)) * term;
    }
    out.push_back(std::move(sum));
  }
  return CountableSet(std::move(out));
}

BinomialConvolvedCoefficients binomial_convolve(const TaylorSeries &series, long m) {
  series.require_dimension(m);
  BinomialConvolvedCoefficients out;
  out.source = &series;
  out.values.reserve(static_cast<size_t>(m + 1));
  out.values.push_back(series.coeffs[0]);
  for (long n = 1; n <= m; ++n) {
    Scalar sum;
    for (long s = 0; s < n; ++s)
      sum += Scalar(binom(n - 1, s)) * series.coeffs[static_cast<size_t>(n - s)];
    out.values.push_back(std::move(sum));
  }
  return out;
}

} // namespace invpow
