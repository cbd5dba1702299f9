#ifndef INVPOW_TRANSFORMS_HPP
#define INVPOW_TRANSFORMS_HPP

#include <vector>

#include "invpow/scalar.hpp"
#include "invpow/series.hpp"

namespace invpow {

/// Finitely supported sequence r_0, r_1, ... indexed from 0.
/// Trailing zeros are trimmed, so size() is the effective length.
class CountableSet {
public:
  CountableSet() = default;
  explicit CountableSet(std::vector<Scalar> elements);

  /// Zero beyond the support.
  Scalar operator[](long i) const;
  long effective_length() const { return static_cast<long>(elements_.size()); }
  const std::vector<Scalar> &elements() const { return elements_; }

  friend CountableSet operator+(const CountableSet &a, const CountableSet &b);
  friend bool operator==(const CountableSet &a, const CountableSet &b) = default;

private:
  std::vector<Scalar> elements_;
};

/// Row operation of order k: r'_i = r_i for i <= k, r'_i = r_i + r_{i-1} for i > k.
/// Throws std::invalid_argument for k < 1.
CountableSet transform_k(const CountableSet &r, long k);

/// transform_m(... transform_1(r)), applied one step at a time.
/// Throws std::invalid_argument for m < 1.
CountableSet sequential_transform(const CountableSet &r, long m);

/// Closed form of sequential_transform as a binomial convolution:
///   out_0 = r_0
///   out_i = sum_{s<i}   C(i-1, s) r_{i-s}   for 1 <= i <= m+1
///   out_i = sum_{s<=m}  C(m, s)   r_{i-s}   for i > m+1
CountableSet sequential_transform_closed(const CountableSet &r, long m);

/// The transformed coefficients C^(m)_0..C^(m)_m:
///   C_0 = c_0,  C_n = sum_{s=0}^{n-1} C(n-1, s) c_{n-s}.
/// Entry n does not depend on m, so longer outputs extend shorter ones.
struct BinomialConvolvedCoefficients {
  std::vector<Scalar> values;
  const TaylorSeries *source = nullptr;
};

/// Throws std::invalid_argument if `series` has fewer than m + 1 coefficients.
BinomialConvolvedCoefficients binomial_convolve(const TaylorSeries &series, long m);

} // namespace invpow

#endif
