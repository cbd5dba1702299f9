#ifndef INVPOW_SCALAR_HPP
#define INVPOW_SCALAR_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>
#include <mpfr.h>

namespace invpow {

/// Owning wrapper around an MPFR value with a fixed precision in bits.
class BigFloat {
public:
  explicit BigFloat(mpfr_prec_t bits);
  BigFloat(const mpq_class &value, mpfr_prec_t bits);
  BigFloat(const BigFloat &other);
  BigFloat(BigFloat &&other) noexcept;
  BigFloat &operator=(const BigFloat &other);
  BigFloat &operator=(BigFloat &&other) noexcept;
  ~BigFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

private:
  mpfr_t value_;
};

/// Selects how scalars are created from text or from exact data.
struct NumericMode {
  bool exact = true;
  mpfr_prec_t precision = 64; // bits, float mode only

  static NumericMode exact_rational() { return {}; }
  static NumericMode floating(mpfr_prec_t bits);
};

inline constexpr mpfr_prec_t kMinFloatPrecision = 64;

/// A real number that is either an exact rational (always in lowest terms,
/// positive denominator) or an MPFR float of at least 64 bits.
///
/// Exact op exact stays exact. Anything touching a float becomes a float at
/// the larger of the participating precisions.
class Scalar {
public:
  Scalar() = default;
  template <std::integral I> Scalar(I v) : value_(mpq_class(static_cast<long>(v))) {}
  explicit Scalar(const mpz_class &v) : value_(mpq_class(v)) {}
  explicit Scalar(const mpq_class &v);
  explicit Scalar(BigFloat v);

  /// num/den reduced to lowest terms. Throws std::domain_error on den == 0.
  static Scalar ratio(const mpz_class &num, const mpz_class &den);

  bool exact() const { return std::holds_alternative<mpq_class>(value_); }
  /// 0 for exact scalars.
  mpfr_prec_t precision() const;

  /// Throws std::logic_error when the scalar is inexact.
  const mpq_class &rational() const;
  /// Throws std::logic_error when the scalar is exact.
  const BigFloat &real() const;

  Scalar to_float(mpfr_prec_t bits) const;
  /// Converts under `mode`; exact targets require an exact source.
  Scalar to_mode(const NumericMode &mode) const;
  double to_double() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }

  Scalar &operator+=(const Scalar &rhs);
  Scalar &operator-=(const Scalar &rhs);
  Scalar &operator*=(const Scalar &rhs);
  Scalar &operator/=(const Scalar &rhs);

  friend Scalar operator+(Scalar lhs, const Scalar &rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar &rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar &rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar &rhs) { return lhs /= rhs; }
  Scalar operator-() const;

  friend std::partial_ordering operator<=>(const Scalar &a, const Scalar &b);
  friend bool operator==(const Scalar &a, const Scalar &b) {
    return (a <=> b) == std::partial_ordering::equivalent;
  }

  /// Exact: "p" or "p/q". Float: shortest round-trip decimal.
  std::string str() const;

private:
  std::variant<mpq_class, BigFloat> value_;
};

Scalar abs(const Scalar &x);

/// x^e for integer e. Throws std::domain_error for 0^negative and
/// std::overflow_error when |e| exceeds kMaxExponent.
Scalar pow(const Scalar &x, long e);
inline constexpr long kMaxExponent = 1L << 24;

/// Parses "p", "p/q", or a decimal with optional exponent ("0.25", "-1.5e-3").
/// In exact mode the decimal is converted to the exact rational it denotes.
/// In float mode anything MPFR accepts is allowed. Throws std::invalid_argument.
Scalar parse_scalar(std::string_view text, const NumericMode &mode = {});

/// Decimal rendering with `digits` significant digits, %g-style layout
/// (trailing zeros stripped, scientific outside 1e-5 .. 1e{digits}).
std::string render_decimal(const Scalar &x, int digits);

/// Exact text ("p/q") for rationals, `render_decimal(x, digits)` for floats.
std::string render_exact(const Scalar &x, int float_digits = 40);

/// Number of significant decimal digits that reproduce a float of `bits`.
int decimal_digits_for(mpfr_prec_t bits);

} // namespace invpow

#endif
