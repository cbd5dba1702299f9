#ifndef INVPOW_SERIES_HPP
#define INVPOW_SERIES_HPP

#include <optional>
#include <vector>

#include "invpow/scalar.hpp"

namespace invpow {

/// Taylor coefficients c_0..c_N of a function about the center x0.
struct TaylorSeries {
  Scalar x0;
  std::vector<Scalar> coeffs;
  /// Radius of the disk where v(z) = f(1/z + x0 - 1) is analytic, when known.
  /// Informational only; nothing in the pipeline enforces it.
  std::optional<Scalar> radius_hint;

  TaylorSeries() = default;
  /// Throws std::invalid_argument when `c` is empty.
  TaylorSeries(Scalar center, std::vector<Scalar> c, std::optional<Scalar> radius = std::nullopt);

  /// Largest approximant dimension these coefficients support.
  long max_dimension() const { return static_cast<long>(coeffs.size()) - 1; }
  bool exact() const;
  /// Throws std::invalid_argument when fewer than m + 1 coefficients are held.
  void require_dimension(long m) const;
};

} // namespace invpow

#endif
