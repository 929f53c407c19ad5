#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pncoef/bigint.hpp"
#include "pncoef/monomial.hpp"
#include "pncoef/oracle.hpp"

namespace pncoef::identities {

/// Sum of all coefficients of row n (specialize every variable to 1): n!.
Bigint total_sum(int n);

/// Sum of the coefficients of the monomials containing x_i: (n-i+1)(n-1)!.
Bigint sum_containing(int n, int i);

/// Sum over the monomials whose largest-index variable is at most x_i
/// (all later exponents zero): i! * i^(n-i).
Bigint sum_max_index(int n, int i);

/// Coefficient of (j, 1, ..., 1, 0, ..., 0) with n-j ones: j^(n-j).
/// Also evaluates that coefficient directly and refuses to disagree.
Bigint staircase_coefficient(int n, int j);

/// The i-th coefficient of row n in display order, 2 <= i <= n: n+1-i.
/// Cross-checked against the actual i-th enumerated coefficient.
Bigint linear_coefficient(int n, int i);

/// The two coefficient-preserving embeddings of a row-(n-1) monomial into
/// row n: prepend a 1, append a 1.  Both results carry coefficient(a).
std::pair<Monomial, Monomial> duplication_maps(const Monomial& a);

/// Primes dividing at least one coefficient of row n: exactly the primes
/// below n.  Verified against the enumerated coefficients when n is within
/// the enumeration bound, including that no larger prime ever divides one.
std::vector<int> prime_support(int n, int enumeration_bound = oracle::kDefaultBound);

struct IdentityReport {
    std::string name;
    int n = 0;
    std::vector<int> parameters;
    Bigint formula_value;
    Bigint enumerated_value;
    bool enumerated = false;
    bool pass = false;
};

/// Runs the whole identity layer for one row.  Enumeration-backed checks run
/// when n <= enumeration_bound; beyond that they are reported formula-only.
/// Cheap cross-checks (staircase values, leading ordered entries) always run.
std::vector<IdentityReport> verify_identities(int n,
                                              int enumeration_bound = oracle::kDefaultBound);

}  // namespace pncoef::identities
