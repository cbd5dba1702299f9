#ifndef INVPOW_IDENTITIES_HPP
#define INVPOW_IDENTITIES_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "invpow/scalar.hpp"

namespace invpow {

/// Finite binomial identities behind the convergence argument for q0 and q1.
enum class IdentityId {
  p6_ineq,        // (m+1)! C(k, m+1) > C(k+n-1, n),  k > m+1, n <= m
  p7_alt_sum,     // sum_{n<=k} (-1)^n C(m,n) = (-1)^k C(m-1,k)
  p8_abel_family, // re-indexed forms of the eq132 sum, one per a in [0, m]
  eq132_closed,   // sum_n (-1)^n C(m,n) C(k+n-1,n) = (-1)^m C(k-1,m)
  hockey_stick,   // sum_{z<m} C(k+z-2, k-2) = C(k+m-2, k-1)
  p9_family,      // split of sum_n (-1)^n C(m,n+1) C(k+n-1,k-1) at a in [1, m-2]
  eq206_closed,   // the q1 weight sum against C(k+n-1,n) in closed form
};

inline constexpr IdentityId kAllIdentities[] = {
    IdentityId::p6_ineq,        IdentityId::p7_alt_sum,  IdentityId::p8_abel_family,
    IdentityId::eq132_closed,   IdentityId::hockey_stick, IdentityId::p9_family,
    IdentityId::eq206_closed,
};

std::string_view identity_name(IdentityId id);

struct IdentityCase {
  IdentityId id;
  std::map<std::string, long> params;
  Scalar lhs;
  Scalar rhs;
  /// lhs == rhs, or lhs > rhs for the strict inequality p6_ineq.
  bool pass = false;
};

// Each check throws std::invalid_argument outside its admissible domain.
// The two sides are computed by different code paths: left sides are
// term-by-term sums over binom(), right sides use closed forms or Pascal
// rows from shared_pascal().

/// m >= 1, 0 <= k <= m-1.
IdentityCase check_p7(long m, long k);
/// m >= 0, k >= 1.
IdentityCase check_eq132(long m, long k);
/// m >= 1, k >= 2.
IdentityCase check_eq206(long m, long k);
/// m, n >= 0, k > m+1, n <= m.
IdentityCase check_p6(long m, long k, long n);
/// k >= 1, 0 <= a <= m.
IdentityCase check_p8_family(long m, long k, long a);
/// m > 1, 1 <= a <= m-2, k >= 2.
IdentityCase check_p9_family(long m, long k, long a);
/// k >= 2, m >= 1.
IdentityCase check_hockey_stick(long k, long m);

/// Inclusive ranges for the suite; the third parameter (a or n) is
/// enumerated over [0, m] for the identities that have one.
struct IdentityRanges {
  long m_min = 0;
  long m_max = 25;
  long k_min = 0;
  long k_max = 25;
};

struct SuiteReport {
  long total = 0; // admissible tuples checked
  long passed = 0;
  long failed = 0;
  long skipped = 0; // enumerated tuples outside an identity's domain
  std::map<IdentityId, long> checked_per_identity;
  std::vector<IdentityCase> failures;
};

/// Exhaustive enumeration over every identity. Tuples are processed in a
/// fixed order; the report does not depend on thread scheduling.
SuiteReport run_suite(const IdentityRanges &ranges, unsigned threads = 1);

/// JSON object {identity_id, params, lhs, rhs, pass}.
std::string to_json(const IdentityCase &c);
/// Counts plus the failing cases.
std::string to_json(const SuiteReport &r, int indent = 2);

} // namespace invpow

#endif
