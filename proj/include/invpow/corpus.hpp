#ifndef INVPOW_CORPUS_HPP
#define INVPOW_CORPUS_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "invpow/scalar.hpp"
#include "invpow/series.hpp"

namespace invpow {

enum class CorpusKind { mobius, shifted_reciprocal, reciprocal_sum };

/// a / (x + b)
struct ReciprocalTerm {
  Scalar a;
  Scalar b;
};

/// Test functions of the form c + sum_i a_i / (x + b_i). Every one of them has
/// exact Taylor coefficients at any non-pole center, an exact asymptote
/// f = c + (sum a_i)/x + O(1/x^2), and a closed-form analyticity radius for
/// v(z) = f(1/z + x0 - 1).
class CorpusFunction {
public:
  /// (alpha x + beta) / (gamma x + delta). Throws std::invalid_argument if gamma == 0.
  static CorpusFunction mobius(Scalar alpha, Scalar beta, Scalar gamma, Scalar delta);
  /// c + a / (x + b)
  static CorpusFunction shifted_reciprocal(Scalar c, Scalar a, Scalar b);
  static CorpusFunction reciprocal_sum(Scalar c, std::vector<ReciprocalTerm> terms);

  CorpusKind kind() const { return kind_; }
  std::string description() const;

  const Scalar &constant() const { return constant_; }
  const std::vector<ReciprocalTerm> &terms() const { return terms_; }

  Scalar known_q0() const { return constant_; }
  Scalar known_q1() const;

  bool is_pole(const Scalar &x) const;
  /// Throws std::domain_error at a pole.
  Scalar operator()(const Scalar &x) const;

  /// Distance from 0 to the nearest pole of v(z) = f(1/z + x0 - 1), i.e.
  /// min_i 1/|b_i + x0 - 1|. nullopt means no pole (infinite radius).
  std::optional<Scalar> hypothesis_radius(const Scalar &x0) const;

private:
  CorpusFunction(CorpusKind kind, Scalar c, std::vector<ReciprocalTerm> terms, std::string label);

  CorpusKind kind_;
  Scalar constant_;
  std::vector<ReciprocalTerm> terms_;
  std::string label_;
};

/// c_0 = f(x0), c_k = sum_i a_i (-1)^k / (x0 + b_i)^(k+1) for k >= 1.
/// Throws std::domain_error when x0 is a pole, std::invalid_argument for n < 1.
TaylorSeries taylor_coeffs(const CorpusFunction &f, const Scalar &x0, long n);

std::pair<Scalar, Scalar> known_asymptote(const CorpusFunction &f);

struct HypothesisReport {
  std::optional<Scalar> radius; // nullopt: infinite
  bool satisfied = false;       // radius > 2
};

HypothesisReport hypothesis_report(const CorpusFunction &f, const Scalar &x0);

/// A function paired with an expansion center.
struct CorpusEntry {
  std::string name;
  CorpusFunction function;
  Scalar x0;
};

/// 1/x at 1 and 5/4, 1/(x+1/4) at 1, x/(x+1) at 1, (2x+3)/(x+2) at 1 and 3/2.
std::vector<CorpusEntry> default_corpus();

/// Resolves a CLI selector:
///   one-over-x, reciprocal-quarter, x-over-x-plus-1, constant (params: c),
///   mobius (params: alpha,beta,gamma,delta), mobius-A-B-C-D with integer
///   parameters, shifted-reciprocal (params: c,a,b),
///   reciprocal-sum (params: c,a1,b1,a2,b2,...).
/// Throws std::invalid_argument for unknown selectors or bad parameter counts.
CorpusFunction corpus_function(std::string_view selector, std::span<const Scalar> params = {});

} // namespace invpow

#endif
