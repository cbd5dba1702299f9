#include "invpow/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace invpow {

CorpusFunction::CorpusFunction(CorpusKind kind, Scalar c, std::vector<ReciprocalTerm> terms,
                               std::string label)
    : kind_(kind), constant_(std::move(c)), label_(std::move(label)) {
  for (auto &t : terms)
    if (!t.a.is_zero())
      terms_.push_back(std::move(t));
}

CorpusFunction CorpusFunction::mobius(Scalar alpha, Scalar beta, Scalar gamma, Scalar delta) {
  if (gamma.is_zero())
    throw std::invalid_argument("Mobius function needs a nonzero gamma");
  // (ax + b)/(gx + d) = a/g + ((bg - ad)/g^2) / (x + d/g)
  std::string label = "(" + alpha.str() + "*x + " + beta.str() + ")/(" + gamma.str() + "*x + " +
                      delta.str() + ")";
  Scalar c = alpha / gamma;
  Scalar a = (beta * gamma - alpha * delta) / (gamma * gamma);
  Scalar b = delta / gamma;
  return CorpusFunction(CorpusKind::mobius, std::move(c), {{std::move(a), std::move(b)}},
                        std::move(label));
}

CorpusFunction CorpusFunction::shifted_reciprocal(Scalar c, Scalar a, Scalar b) {
  std::string label = c.str() + " + " + a.str() + "/(x + " + b.str() + ")";
  return CorpusFunction(CorpusKind::shifted_reciprocal, std::move(c),
                        {{std::move(a), std::move(b)}}, std::move(label));
}

CorpusFunction CorpusFunction::reciprocal_sum(Scalar c, std::vector<ReciprocalTerm> terms) {
  std::string label = c.str();
  for (const auto &t : terms)
    label += " + " + t.a.str() + "/(x + " + t.b.str() + ")";
  return CorpusFunction(CorpusKind::reciprocal_sum, std::move(c), std::move(terms),
                        std::move(label));
}

std::string CorpusFunction::description() const { return label_; }

Scalar CorpusFunction::known_q1() const {
  Scalar sum;
  for (const auto &t : terms_)
    sum += t.a;
  return sum;
}

bool CorpusFunction::is_pole(const Scalar &x) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const ReciprocalTerm &t) { return (x + t.b).is_zero(); });
}

Scalar CorpusFunction::operator()(const Scalar &x) const {
  Scalar value = constant_;
  for (const auto &t : terms_) {
    const Scalar shifted = x + t.b;
    if (shifted.is_zero())
      throw std::domain_error("corpus function evaluated at its pole x = " + x.str());
    value += t.a / shifted;
  }
  return value;
}

std::optional<Scalar> CorpusFunction::hypothesis_radius(const Scalar &x0) const {
  std::optional<Scalar> best;
  for (const auto &t : terms_) {
    const Scalar offset = abs(t.b + x0 - Scalar(1));
    if (offset.is_zero())
      continue;
    Scalar r = Scalar(1) / offset;
    if (!best || r < *best)
      best = std::move(r);
  }
  return best;
}

TaylorSeries taylor_coeffs(const CorpusFunction &f, const Scalar &x0, long n) {
  if (n < 1)
    throw std::invalid_argument("at least one coefficient must be requested");
  if (f.is_pole(x0))
    throw std::domain_error("expansion center " + x0.str() + " is a pole");
  std::vector<Scalar> c(static_cast<size_t>(n));
  c[0] = f(x0);
  for (const auto &t : f.terms()) {
    const Scalar ratio = Scalar(-1) / (x0 + t.b); // -1/u
    Scalar term = -t.a * ratio;                   // a/u
    for (long k = 1; k < n; ++k) {
      term *= ratio; // a (-1)^k / u^(k+1)
      c[static_cast<size_t>(k)] += term;
    }
  }
  const auto report = hypothesis_report(f, x0);
  return TaylorSeries(x0, std::move(c), report.radius);
}

std::pair<Scalar, Scalar> known_asymptote(const CorpusFunction &f) {
  return {f.known_q0(), f.known_q1()};
}

HypothesisReport hypothesis_report(const CorpusFunction &f, const Scalar &x0) {
  HypothesisReport out;
  out.radius = f.hypothesis_radius(x0);
  out.satisfied = !out.radius || *out.radius > Scalar(2);
  return out;
}

std::vector<CorpusEntry> default_corpus() {
  const auto one_over_x = corpus_function("one-over-x");
  const auto mob = corpus_function("mobius-2-3-1-2");
  return {
      {"one-over-x@1", one_over_x, Scalar(1)},
      {"one-over-x@5/4", one_over_x, Scalar::ratio(5, 4)},
      {"reciprocal-quarter@1", corpus_function("reciprocal-quarter"), Scalar(1)},
      {"x-over-x-plus-1@1", corpus_function("x-over-x-plus-1"), Scalar(1)},
      {"mobius-2-3-1-2@1", mob, Scalar(1)},
      {"mobius-2-3-1-2@3/2", mob, Scalar::ratio(3, 2)},
  };
}

namespace {

void expect_params(std::string_view selector, std::span<const Scalar> params, size_t n) {
  if (params.size() != n)
    throw std::invalid_argument(std::string(selector) + " expects " + std::to_string(n) +
                                " parameters, got " + std::to_string(params.size()));
}

// "mobius-2-3-1-2" and "mobius--1-0-1-1" style integer parameter lists.
std::optional<std::vector<Scalar>> inline_integers(std::string_view rest) {
  std::vector<Scalar> out;
  size_t pos = 0;
  while (pos <= rest.size()) {
    if (pos == rest.size() || rest[pos] != '-')
      return std::nullopt;
    ++pos;
    bool negative = false;
    if (pos < rest.size() && rest[pos] == '-') {
      negative = true;
      ++pos;
    }
    long v = 0;
    auto [ptr, ec] = std::from_chars(rest.data() + pos, rest.data() + rest.size(), v);
    if (ec != std::errc() || ptr == rest.data() + pos)
      return std::nullopt;
    out.emplace_back(negative ? -v : v);
    pos = static_cast<size_t>(ptr - rest.data());
    if (pos == rest.size())
      break;
  }
  return out;
}

} // namespace

CorpusFunction corpus_function(std::string_view selector, std::span<const Scalar> params) {
  if (selector == "one-over-x") {
    expect_params(selector, params, 0);
    return CorpusFunction::shifted_reciprocal(0, 1, 0);
  }
  if (selector == "reciprocal-quarter") {
    expect_params(selector, params, 0);
    return CorpusFunction::shifted_reciprocal(0, 1, Scalar::ratio(1, 4));
  }
  if (selector == "x-over-x-plus-1") {
    expect_params(selector, params, 0);
    return CorpusFunction::mobius(1, 0, 1, 1);
  }
  if (selector == "constant") {
    expect_params(selector, params, 1);
    return CorpusFunction::reciprocal_sum(params[0], {});
  }
  if (selector == "mobius") {
    expect_params(selector, params, 4);
    return CorpusFunction::mobius(params[0], params[1], params[2], params[3]);
  }
  if (selector == "shifted-reciprocal") {
    expect_params(selector, params, 3);
    return CorpusFunction::shifted_reciprocal(params[0], params[1], params[2]);
  }
  if (selector == "reciprocal-sum") {
    if (params.empty() || params.size() % 2 != 1)
      throw std::invalid_argument("reciprocal-sum expects c followed by (a, b) pairs");
    std::vector<ReciprocalTerm> terms;
    for (size_t i = 1; i < params.size(); i += 2)
      terms.push_back({params[i], params[i + 1]});
    return CorpusFunction::reciprocal_sum(params[0], std::move(terms));
  }
  constexpr std::string_view mobius_prefix = "mobius";
  if (selector.starts_with(mobius_prefix)) {
    auto inline_params = inline_integers(selector.substr(mobius_prefix.size()));
    if (inline_params && inline_params->size() == 4) {
      expect_params(selector, params, 0);
      const auto &p = *inline_params;
      return CorpusFunction::mobius(p[0], p[1], p[2], p[3]);
    }
  }
  throw std::invalid_argument("unknown corpus function '" + std::string(selector) + "'");
}

} // namespace invpow
