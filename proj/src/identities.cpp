#include "invpow/identities.hpp"

#include <future>
#include <stdexcept>

#include "json.hpp"

#include "invpow/binomial.hpp"

namespace invpow {

namespace {

mpz_class sign(long e) { return (e % 2 == 0) ? 1 : -1; }

// Right-hand sides read binomials from the Pascal rows; left-hand sides call binom().
mpz_class pascal(long a, long b) { return shared_pascal().get(a, b); }

void require(bool ok, const char *what) {
  if (!ok)
    throw std::invalid_argument(std::string("parameters outside the admissible domain: ") + what);
}

IdentityCase equality(IdentityId id, std::map<std::string, long> params, const mpz_class &lhs,
                      const mpz_class &rhs) {
  return {id, std::move(params), Scalar(lhs), Scalar(rhs), lhs == rhs};
}

} // namespace

std::string_view identity_name(IdentityId id) {
  switch (id) {
  case IdentityId::p6_ineq: return "P6_INEQ";
  case IdentityId::p7_alt_sum: return "P7_ALT_SUM";
  case IdentityId::p8_abel_family: return "P8_ABEL_FAMILY";
  case IdentityId::eq132_closed: return "EQ132_CLOSED";
  case IdentityId::hockey_stick: return "HOCKEY_STICK";
  case IdentityId::p9_family: return "P9_FAMILY";
  case IdentityId::eq206_closed: return "EQ206_CLOSED";
  }
  return "UNKNOWN";
}

IdentityCase check_p7(long m, long k) {
  require(m >= 1 && k >= 0 && k <= m - 1, "p7 needs m >= 1, 0 <= k <= m-1");
  mpz_class lhs = 0;
  for (long n = 0; n <= k; ++n)
    lhs += sign(n) * binom(m, n);
  return equality(IdentityId::p7_alt_sum, {{"m", m}, {"k", k}}, lhs, sign(k) * pascal(m - 1, k));
}

IdentityCase check_eq132(long m, long k) {
  require(m >= 0 && k >= 1, "eq132 needs m >= 0, k >= 1");
  mpz_class lhs = 0;
  for (long n = 0; n <= m; ++n)
    lhs += sign(n) * binom(m, n) * binom(k + n - 1, n);
  return equality(IdentityId::eq132_closed, {{"m", m}, {"k", k}}, lhs, sign(m) * pascal(k - 1, m));
}

IdentityCase check_eq206(long m, long k) {
  require(m >= 1 && k >= 2, "eq206 needs m >= 1, k >= 2");
  mpz_class lhs = 0;
  for (long n = 1; n <= m; ++n)
    lhs += (binom(m, n + 1) - m * binom(m, n)) * sign(n) * binom(k + n - 1, n);
  const mpz_class rhs = sign(m - 1) * (m * pascal(k - 1, m) + pascal(k - 2, m - 1));
  return equality(IdentityId::eq206_closed, {{"m", m}, {"k", k}}, lhs, rhs);
}

IdentityCase check_p6(long m, long k, long n) {
  require(m >= 0 && n >= 0 && n <= m && k > m + 1, "p6 needs k > m+1, 0 <= n <= m");
  // (m+1)! C(k, m+1) is the falling factorial k (k-1) ... (k-m).
  mpz_class lhs = 1;
  for (long i = 0; i <= m; ++i)
    lhs *= k - i;
  const mpz_class rhs = pascal(k + n - 1, n);
  return {IdentityId::p6_ineq, {{"m", m}, {"k", k}, {"n", n}}, Scalar(lhs), Scalar(rhs), lhs > rhs};
}

IdentityCase check_p8_family(long m, long k, long a) {
  require(k >= 1 && a >= 0 && a <= m, "p8 needs k >= 1, 0 <= a <= m");
  mpz_class lhs = 0;
  for (long n = 0; n <= m; ++n)
    lhs += sign(n) * binom(m, n) * binom(k + n - 1, n);
  mpz_class inner = 0;
  for (long r = 1; r <= m + 1 - a; ++r)
    inner += sign(r - 1) * pascal(k + r - 2, r - 1 + a) * pascal(m - a, r - 1);
  return equality(IdentityId::p8_abel_family, {{"m", m}, {"k", k}, {"a", a}}, lhs, sign(a) * inner);
}

IdentityCase check_p9_family(long m, long k, long a) {
  require(m > 1 && a >= 1 && a <= m - 2 && k >= 2, "p9 needs m > 1, 1 <= a <= m-2, k >= 2");
  mpz_class lhs = 0;
  for (long n = 1; n <= m - 1; ++n)
    lhs += sign(n) * binom(m, n + 1) * binom(k + n - 1, k - 1);
  mpz_class split = 0;
  for (long n = 1; n <= m - 1 - a; ++n)
    split += sign(n) * pascal(m - a, n + 1) * pascal(k + n - 1, k - 1 - a);
  mpz_class tail = 0;
  for (long r = 1; r <= a; ++r)
    tail += sign(r) * (m - r) * pascal(k, r);
  return equality(IdentityId::p9_family, {{"m", m}, {"k", k}, {"a", a}}, lhs,
                  sign(a) * split + tail);
}

IdentityCase check_hockey_stick(long k, long m) {
  require(k >= 2 && m >= 1, "hockey stick needs k >= 2, m >= 1");
  mpz_class lhs = 0;
  for (long z = 0; z <= m - 1; ++z)
    lhs += binom(k + z - 2, k - 2);
  return equality(IdentityId::hockey_stick, {{"k", k}, {"m", m}}, lhs, pascal(k + m - 2, k - 1));
}

namespace {

bool admissible(IdentityId id, long m, long k, long t) {
  switch (id) {
  case IdentityId::p6_ineq: return m >= 0 && t >= 0 && t <= m && k > m + 1;
  case IdentityId::p7_alt_sum: return m >= 1 && k >= 0 && k <= m - 1;
  case IdentityId::p8_abel_family: return k >= 1 && t >= 0 && t <= m;
  case IdentityId::eq132_closed: return m >= 0 && k >= 1;
  case IdentityId::hockey_stick: return k >= 2 && m >= 1;
  case IdentityId::p9_family: return m > 1 && t >= 1 && t <= m - 2 && k >= 2;
  case IdentityId::eq206_closed: return m >= 1 && k >= 2;
  }
  return false;
}

bool has_third_parameter(IdentityId id) {
  return id == IdentityId::p6_ineq || id == IdentityId::p8_abel_family || id == IdentityId::p9_family;
}

IdentityCase dispatch(IdentityId id, long m, long k, long t) {
  switch (id) {
  case IdentityId::p6_ineq: return check_p6(m, k, t);
  case IdentityId::p7_alt_sum: return check_p7(m, k);
  case IdentityId::p8_abel_family: return check_p8_family(m, k, t);
  case IdentityId::eq132_closed: return check_eq132(m, k);
  case IdentityId::hockey_stick: return check_hockey_stick(k, m);
  case IdentityId::p9_family: return check_p9_family(m, k, t);
  case IdentityId::eq206_closed: return check_eq206(m, k);
  }
  throw std::logic_error("unknown identity");
}

struct Tuple {
  IdentityId id;
  long m, k, t;
};

} // namespace

SuiteReport run_suite(const IdentityRanges &ranges, unsigned threads) {
  SuiteReport report;
  std::vector<Tuple> work;
  for (IdentityId id : kAllIdentities)
    for (long m = ranges.m_min; m <= ranges.m_max; ++m)
      for (long k = ranges.k_min; k <= ranges.k_max; ++k) {
        const long t_hi = has_third_parameter(id) ? std::max(m, 0L) : 0;
        for (long t = 0; t <= t_hi; ++t) {
          if (admissible(id, m, k, t))
            work.push_back({id, m, k, t});
          else
            ++report.skipped;
        }
      }

  // Contiguous chunks, merged back in submission order.
  threads = std::max(1u, threads);
  const size_t chunk = (work.size() + threads - 1) / threads;
  std::vector<std::future<std::vector<IdentityCase>>> parts;
  for (size_t begin = 0; begin < work.size(); begin += chunk) {
    const size_t end = std::min(work.size(), begin + chunk);
    parts.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred,
                               [&work, begin, end] {
                                 std::vector<IdentityCase> failures;
                                 for (size_t i = begin; i < end; ++i) {
                                   auto c = dispatch(work[i].id, work[i].m, work[i].k, work[i].t);
                                   if (!c.pass)
                                     failures.push_back(std::move(c));
                                 }
                                 return failures;
                               }));
  }
  for (auto &p : parts)
    for (auto &f : p.get())
      report.failures.push_back(std::move(f));

  for (const auto &w : work)
    ++report.checked_per_identity[w.id];
  report.total = static_cast<long>(work.size());
  report.failed = static_cast<long>(report.failures.size());
  report.passed = report.total - report.failed;
  return report;
}

namespace {

nlohmann::ordered_json case_json(const IdentityCase &c) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto &[name, value] : c.params)
    params[name] = value;
  return {{"identity_id", std::string(identity_name(c.id))},
          {"params", params},
          {"lhs", c.lhs.str()},
          {"rhs", c.rhs.str()},
          {"pass", c.pass}};
}

} // namespace

std::string to_json(const IdentityCase &c) { return case_json(c).dump(); }

std::string to_json(const SuiteReport &r, int indent) {
  nlohmann::ordered_json doc;
  doc["total"] = r.total;
  doc["passed"] = r.passed;
  doc["failed"] = r.failed;
  doc["skipped"] = r.skipped;
  nlohmann::ordered_json per = nlohmann::ordered_json::object();
  for (const auto &[id, n] : r.checked_per_identity)
    per[std::string(identity_name(id))] = n;
  doc["checked_per_identity"] = per;
  doc["failures"] = nlohmann::ordered_json::array();
  for (const auto &c : r.failures)
    doc["failures"].push_back(case_json(c));
  return doc.dump(indent);
}

} // namespace invpow
