#include "invpow/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>

namespace invpow {

// ---------------------------------------------------------------- BigFloat

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const mpq_class &value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat &other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat &&other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

BigFloat &BigFloat::operator=(const BigFloat &other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat &BigFloat::operator=(BigFloat &&other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

NumericMode NumericMode::floating(mpfr_prec_t bits) {
  if (bits < kMinFloatPrecision)
    throw std::invalid_argument("float mode requires at least 64 bits of precision");
  return NumericMode{false, bits};
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(const mpq_class &v) : value_(v) {
  std::get<mpq_class>(value_).canonicalize();
}

Scalar::Scalar(BigFloat v) : value_(std::move(v)) {
  if (std::get<BigFloat>(value_).precision() < kMinFloatPrecision)
    throw std::invalid_argument("float scalars require at least 64 bits of precision");
  if (!mpfr_number_p(std::get<BigFloat>(value_).get()))
    throw std::domain_error("non-finite float scalar");
}

Scalar Scalar::ratio(const mpz_class &num, const mpz_class &den) {
  if (den == 0)
    throw std::domain_error("division by zero");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

mpfr_prec_t Scalar::precision() const {
  return exact() ? 0 : std::get<BigFloat>(value_).precision();
}

const mpq_class &Scalar::rational() const {
  if (!exact())
    throw std::logic_error("scalar is not exact");
  return std::get<mpq_class>(value_);
}

const BigFloat &Scalar::real() const {
  if (exact())
    throw std::logic_error("scalar is exact");
  return std::get<BigFloat>(value_);
}

Scalar Scalar::to_float(mpfr_prec_t bits) const {
  if (exact())
    return Scalar(BigFloat(rational(), bits));
  BigFloat out(bits);
  mpfr_set(out.get(), real().get(), MPFR_RNDN);
  return Scalar(std::move(out));
}

Scalar Scalar::to_mode(const NumericMode &mode) const {
  if (mode.exact) {
    if (!exact())
      throw std::invalid_argument("cannot convert an inexact scalar to exact mode");
    return *this;
  }
  return to_float(mode.precision);
}

double Scalar::to_double() const {
  if (exact())
    return rational().get_d();
  return mpfr_get_d(real().get(), MPFR_RNDN);
}

int Scalar::sign() const {
  if (exact())
    return sgn(rational());
  return mpfr_sgn(real().get());
}

namespace {

mpfr_prec_t joint_precision(const Scalar &a, const Scalar &b) {
  return std::max(a.precision(), b.precision());
}

enum class Op { add, sub, mul, div };

// Exact rational operand `q` combined with float `f`, correctly rounded.
BigFloat mixed(Op op, const BigFloat &f, const mpq_class &q, bool q_on_left,
               mpfr_prec_t bits) {
  BigFloat out(bits);
  switch (op) {
  case Op::add:
    mpfr_add_q(out.get(), f.get(), q.get_mpq_t(), MPFR_RNDN);
    break;
  case Op::sub:
    mpfr_sub_q(out.get(), f.get(), q.get_mpq_t(), MPFR_RNDN);
    if (q_on_left)
      mpfr_neg(out.get(), out.get(), MPFR_RNDN);
    break;
  case Op::mul:
    mpfr_mul_q(out.get(), f.get(), q.get_mpq_t(), MPFR_RNDN);
    break;
  case Op::div:
    if (q_on_left) {
      // MPFR has no q / f; widen q so the single rounding of the division dominates.
      BigFloat wide(q, bits + 64);
      mpfr_div(out.get(), wide.get(), f.get(), MPFR_RNDN);
    } else {
      mpfr_div_q(out.get(), f.get(), q.get_mpq_t(), MPFR_RNDN);
    }
    break;
  }
  return out;
}

BigFloat both_float(Op op, const BigFloat &a, const BigFloat &b, mpfr_prec_t bits) {
  BigFloat out(bits);
  switch (op) {
  case Op::add: mpfr_add(out.get(), a.get(), b.get(), MPFR_RNDN); break;
  case Op::sub: mpfr_sub(out.get(), a.get(), b.get(), MPFR_RNDN); break;
  case Op::mul: mpfr_mul(out.get(), a.get(), b.get(), MPFR_RNDN); break;
  case Op::div: mpfr_div(out.get(), a.get(), b.get(), MPFR_RNDN); break;
  }
  return out;
}

Scalar apply(Op op, const Scalar &a, const Scalar &b) {
  if (op == Op::div && b.is_zero())
    throw std::domain_error("division by zero");
  if (a.exact() && b.exact()) {
    const mpq_class &x = a.rational();
    const mpq_class &y = b.rational();
    switch (op) {
    case Op::add: return Scalar(mpq_class(x + y));
    case Op::sub: return Scalar(mpq_class(x - y));
    case Op::mul: return Scalar(mpq_class(x * y));
    case Op::div: return Scalar(mpq_class(x / y));
    }
  }
  const mpfr_prec_t bits = joint_precision(a, b);
  if (a.exact())
    return Scalar(mixed(op, b.real(), a.rational(), true, bits));
  if (b.exact())
    return Scalar(mixed(op, a.real(), b.rational(), false, bits));
  return Scalar(both_float(op, a.real(), b.real(), bits));
}

} // namespace

Scalar &Scalar::operator+=(const Scalar &rhs) { return *this = apply(Op::add, *this, rhs); }
Scalar &Scalar::operator-=(const Scalar &rhs) { return *this = apply(Op::sub, *this, rhs); }
Scalar &Scalar::operator*=(const Scalar &rhs) { return *this = apply(Op::mul, *this, rhs); }
Scalar &Scalar::operator/=(const Scalar &rhs) { return *this = apply(Op::div, *this, rhs); }

Scalar Scalar::operator-() const {
  if (exact())
    return Scalar(mpq_class(-rational()));
  BigFloat out(precision());
  mpfr_neg(out.get(), real().get(), MPFR_RNDN);
  return Scalar(std::move(out));
}

std::partial_ordering operator<=>(const Scalar &a, const Scalar &b) {
  int c = 0;
  if (a.exact() && b.exact())
    c = cmp(a.rational(), b.rational());
  else if (a.exact())
    c = -mpfr_cmp_q(b.real().get(), a.rational().get_mpq_t());
  else if (b.exact())
    c = mpfr_cmp_q(a.real().get(), b.rational().get_mpq_t());
  else
    c = mpfr_cmp(a.real().get(), b.real().get());
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::string Scalar::str() const {
  if (exact())
    return rational().get_str();
  return render_decimal(*this, decimal_digits_for(precision()));
}

Scalar abs(const Scalar &x) { return x.sign() < 0 ? -x : x; }

Scalar pow(const Scalar &x, long e) {
  if (e > kMaxExponent || e < -kMaxExponent)
    throw std::overflow_error("exponent out of range");
  if (e < 0 && x.is_zero())
    throw std::domain_error("zero raised to a negative power");
  const unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  if (x.exact()) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), x.rational().get_num_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), x.rational().get_den_mpz_t(), n);
    return e < 0 ? Scalar::ratio(den, num) : Scalar::ratio(num, den);
  }
  BigFloat out(x.precision());
  mpfr_pow_si(out.get(), x.real().get(), e, MPFR_RNDN);
  return Scalar(std::move(out));
}

// ---------------------------------------------------------------- text

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      return false;
  return true;
}

std::optional<mpq_class> parse_rational_literal(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      return std::nullopt;
    mpz_class d(std::string(den), 10);
    if (d == 0)
      throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
    mpq_class q(mpz_class(std::string(num), 10), d);
    q.canonicalize();
    return negative ? mpq_class(-q) : q;
  }

  std::string_view mantissa = s, exponent;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = s.substr(0, e);
    exponent = s.substr(e + 1);
    if (exponent.empty())
      return std::nullopt;
  }
  std::string_view int_part = mantissa, frac_part;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    int_part = mantissa.substr(0, dot);
    frac_part = mantissa.substr(dot + 1);
    if (!frac_part.empty() && !all_digits(frac_part))
      return std::nullopt;
  }
  if (!int_part.empty() && !all_digits(int_part))
    return std::nullopt;
  if (int_part.empty() && frac_part.empty())
    return std::nullopt;

  long exp10 = 0;
  if (!exponent.empty()) {
    bool exp_negative = false;
    if (exponent.front() == '+' || exponent.front() == '-') {
      exp_negative = exponent.front() == '-';
      exponent.remove_prefix(1);
    }
    if (!all_digits(exponent) || exponent.size() > 7)
      return std::nullopt;
    exp10 = std::stol(std::string(exponent));
    if (exp_negative)
      exp10 = -exp10;
  }
  std::string digits = std::string(int_part) + std::string(frac_part);
  if (digits.empty())
    digits = "0";
  exp10 -= static_cast<long>(frac_part.size());

  mpz_class num(digits, 10), scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  mpq_class q = exp10 < 0 ? mpq_class(num, scale) : mpq_class(num * scale);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

std::string layout(const std::string &digits, long exp10, bool negative, int budget) {
  std::string d = digits;
  while (d.size() > 1 && d.back() == '0')
    d.pop_back();
  std::string out = negative ? "-" : "";
  if (exp10 < -5 || exp10 >= budget) {
    out += d.substr(0, 1);
    if (d.size() > 1)
      out += "." + d.substr(1);
    out += exp10 < 0 ? "e-" : "e+";
    std::string e = std::to_string(exp10 < 0 ? -exp10 : exp10);
    if (e.size() < 2)
      e = "0" + e;
    return out + e;
  }
  if (exp10 < 0)
    return out + "0." + std::string(static_cast<size_t>(-exp10 - 1), '0') + d;
  const auto int_len = static_cast<size_t>(exp10 + 1);
  if (d.size() <= int_len)
    return out + d + std::string(int_len - d.size(), '0');
  return out + d.substr(0, int_len) + "." + d.substr(int_len);
}

} // namespace

Scalar parse_scalar(std::string_view text, const NumericMode &mode) {
  const std::string_view s = trim(text);
  if (s.empty())
    throw std::invalid_argument("empty number");
  auto q = parse_rational_literal(s);
  if (mode.exact) {
    if (!q)
      throw std::invalid_argument("'" + std::string(s) + "' is not an exact rational literal");
    return Scalar(*q);
  }
  if (q)
    return Scalar(BigFloat(*q, mode.precision));
  BigFloat f(mode.precision);
  const std::string buf(s);
  char *end = nullptr;
  mpfr_strtofr(f.get(), buf.c_str(), &end, 0, MPFR_RNDN);
  if (end == buf.c_str() || *end != '\0')
    throw std::invalid_argument("'" + buf + "' is not a number");
  if (!mpfr_number_p(f.get()))
    throw std::invalid_argument("'" + buf + "' is not finite");
  return Scalar(std::move(f));
}

std::string render_decimal(const Scalar &x, int digits) {
  if (digits < 1)
    throw std::invalid_argument("digit budget must be positive");
  if (x.is_zero())
    return "0";
  if (!x.exact()) {
    mpfr_exp_t e = 0;
    char *raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), x.real().get(), MPFR_RNDN);
    std::string s(raw);
    mpfr_free_str(raw);
    const bool negative = s.front() == '-';
    if (negative)
      s.erase(0, 1);
    return layout(s, static_cast<long>(e) - 1, negative, digits);
  }

  const mpq_class &q = x.rational();
  const bool negative = sgn(q) < 0;
  const mpz_class num = abs(q.get_num());
  const mpz_class &den = q.get_den();
  // floor(log10 |q|) is within one of the digit-count difference.
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  auto ten_pow = [](long k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return r;
  };
  auto at_least = [&](long k) { // |q| >= 10^k
    return k >= 0 ? num >= den * ten_pow(k) : num * ten_pow(-k) >= den;
  };
  while (!at_least(e))
    --e;
  while (at_least(e + 1))
    ++e;

  // scaled = round_half_up(|q| * 10^(digits-1-e))
  const long shift = digits - 1 - e;
  mpz_class top = num, bottom = den;
  if (shift >= 0)
    top *= ten_pow(shift);
  else
    bottom *= ten_pow(-shift);
  mpz_class scaled = (2 * top + bottom) / (2 * bottom);
  if (scaled >= ten_pow(digits)) {
    scaled /= 10;
    ++e;
  }
  return layout(scaled.get_str(), e, negative, digits);
}

std::string render_exact(const Scalar &x, int float_digits) {
  return x.exact() ? x.rational().get_str() : render_decimal(x, float_digits);
}

int decimal_digits_for(mpfr_prec_t bits) {
  return static_cast<int>(std::ceil(static_cast<double>(bits) * std::log10(2.0))) + 1;
}

} // namespace invpow
