#include "invpow/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace invpow {

TaylorSeries::TaylorSeries(Scalar center, std::vector<Scalar> c, std::optional<Scalar> radius)
    : x0(std::move(center)), coeffs(std::move(c)), radius_hint(std::move(radius)) {
  if (coeffs.empty())
    throw std::invalid_argument("a Taylor series needs at least one coefficient");
}

bool TaylorSeries::exact() const {
  return x0.exact() &&
         std::all_of(coeffs.begin(), coeffs.end(), [](const Scalar &c) { return c.exact(); });
}

void TaylorSeries::require_dimension(long m) const {
  if (m < 0)
    throw std::invalid_argument("dimension must be non-negative");
  if (m > max_dimension())
    throw std::invalid_argument("dimension " + std::to_string(m) + " needs " +
                                std::to_string(m + 1) + " coefficients, series has " +
                                std::to_string(coeffs.size()));
}

} // namespace invpow
