#ifndef INVPOW_COEFF_FILE_HPP
#define INVPOW_COEFF_FILE_HPP

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "invpow/scalar.hpp"
#include "invpow/series.hpp"

namespace invpow {

/// On-disk form of a Taylor series:
///
///   { "center": "1", "coeffs": ["1", "-1/2", "0.25"], "exact": true,
///     "meta": { "hypothesis_radius": "4" | "inf" | null, "description": "..." } }
///
/// Every scalar is a string so that rationals survive unchanged.
struct CoefficientFile {
  Scalar center;
  std::vector<Scalar> coeffs;
  bool exact = true;
  /// "inf" or a scalar literal; nullopt when unknown.
  std::optional<std::string> hypothesis_radius;
  std::string description;

  TaylorSeries to_series() const;
};

/// Raised for malformed files; the message names the line/column or field.
class CoefficientFileError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// `float_precision` applies when the file declares "exact": false.
CoefficientFile parse_coefficient_file(std::string_view json_text, mpfr_prec_t float_precision = 64);
std::string format_coefficient_file(const CoefficientFile &file);

TaylorSeries load_coefficient_file(const std::filesystem::path &path, mpfr_prec_t float_precision = 64);
void save_coefficient_file(const TaylorSeries &series, const std::filesystem::path &path,
                           std::string description = {});

/// Builds the file record for a series; the radius hint is written as
/// `radius_text` when given, otherwise from series.radius_hint.
CoefficientFile make_coefficient_file(const TaylorSeries &series, std::string description,
                                      std::optional<std::string> radius_text = std::nullopt);

} // namespace invpow

#endif
