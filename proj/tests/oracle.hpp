// Test-only reference computations. Nothing here calls into the library's
// arithmetic beyond GMP itself, so agreement is an independent check.
#ifndef INVPOW_TESTS_ORACLE_HPP
#define INVPOW_TESTS_ORACLE_HPP

#include <random>
#include <vector>

#include <gmpxx.h>

#include "invpow/scalar.hpp"

namespace oracle {

/// Fraction arithmetic that never reduces; equality by cross-multiplication.
struct NaiveFraction {
  mpz_class num = 0;
  mpz_class den = 1;

  NaiveFraction() = default;
  NaiveFraction(long v) : num(v) {}
  NaiveFraction(mpz_class n, mpz_class d) : num(std::move(n)), den(std::move(d)) {}

  friend NaiveFraction operator+(const NaiveFraction &a, const NaiveFraction &b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend NaiveFraction operator-(const NaiveFraction &a, const NaiveFraction &b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend NaiveFraction operator*(const NaiveFraction &a, const NaiveFraction &b) {
    return {a.num * b.num, a.den * b.den};
  }
  friend NaiveFraction operator/(const NaiveFraction &a, const NaiveFraction &b) {
    return {a.num * b.den, a.den * b.num};
  }
  friend bool operator==(const NaiveFraction &a, const NaiveFraction &b) {
    return a.num * b.den == b.num * a.den;
  }
  bool equals(const invpow::Scalar &s) const {
    const auto &q = s.rational();
    return num * q.get_den() == q.get_num() * den;
  }
};

/// Pascal table built by plain addition, rows 0..n.
inline std::vector<std::vector<mpz_class>> pascal_table(long n) {
  std::vector<std::vector<mpz_class>> t(static_cast<size_t>(n + 1));
  for (long a = 0; a <= n; ++a) {
    t[a].assign(static_cast<size_t>(a + 1), 1);
    for (long b = 1; b < a; ++b)
      t[a][b] = t[a - 1][b - 1] + t[a - 1][b];
  }
  return t;
}

/// C(a, b) with the zero convention, table-backed.
struct Binomials {
  explicit Binomials(long n) : table(pascal_table(n)) {}
  mpz_class operator()(long a, long b) const {
    if (b < 0 || b > a)
      return 0;
    return table[a][b];
  }
  std::vector<std::vector<mpz_class>> table;
};

/// sum_{n=0}^m C(m,n) c_n, term by term.
inline NaiveFraction brute_q0(const std::vector<NaiveFraction> &c, long m, const Binomials &C) {
  NaiveFraction s;
  for (long n = 0; n <= m; ++n)
    s = s + NaiveFraction(C(m, n), 1) * c[n];
  return s;
}

/// sum_{n=1}^m {C(m,n+1) - m C(m,n)} c_n, term by term.
inline NaiveFraction brute_q1(const std::vector<NaiveFraction> &c, long m, const Binomials &C) {
  NaiveFraction s;
  for (long n = 1; n <= m; ++n)
    s = s + NaiveFraction(C(m, n + 1) - m * C(m, n), 1) * c[n];
  return s;
}

/// Random rational p/q with |p| <= span, 1 <= q <= span.
inline mpq_class random_rational(std::mt19937_64 &rng, long span = 9) {
  std::uniform_int_distribution<long> num(-span, span), den(1, span);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline std::vector<invpow::Scalar> random_scalars(std::mt19937_64 &rng, size_t n, long span = 9) {
  std::vector<invpow::Scalar> out;
  for (size_t i = 0; i < n; ++i)
    out.emplace_back(random_rational(rng, span));
  return out;
}

inline NaiveFraction to_naive(const mpq_class &q) { return {q.get_num(), q.get_den()}; }

} // namespace oracle

#endif
