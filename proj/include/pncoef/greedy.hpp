#pragma once

#include <vector>

#include "pncoef/bigint.hpp"
#include "pncoef/monomial.hpp"

namespace pncoef::greedy {

/// Candidate successors of a length-(n-1) staircase member: append a zero,
/// then scan i = n..1 over the padded vector r' and emit a copy with entry i
/// incremented whenever the value is about to rise there:
///   i = n:      r'[n] != r'[n-1]
///   1 < i < n:  r'[i] != r'[i-1] and r'[i] = r'[i+1]
///   i = 1:      r'[1] = r'[2]
/// Output keeps the scan order.  Every candidate is again a staircase member
/// and the list is never empty.
std::vector<Monomial> candidates(const Monomial& r);

/// One growth step with full detail, for tracing and reports.
struct Step {
    std::vector<Monomial> candidates;  // scan order
    std::vector<Bigint> coefficients;  // aligned with candidates
    int selected = 0;                  // first index attaining the maximum
    bool tie = false;                  // another candidate attained it too
};

Step grow_step(const Monomial& previous, const BinomialTable& binom);

struct GreedyRun {
    std::vector<Monomial> r;    // empty when monomials are not kept
    std::vector<Bigint> s;      // s[k] is the coefficient at length k+1
    std::vector<int> tie_steps; // lengths where the argmax was not unique
};

/// Grows from (1) up to length l, at each step keeping the candidate with
/// the maximal coefficient.  Ties take the first candidate in scan order and
/// are recorded in tie_steps so divergence points stay auditable.
GreedyRun run(int l, bool keep_monomials = true);

/// Which consecutive quotients s_{n+1}/s_n are integers, and which integers
/// below the largest observed integral quotient never occur.
struct QuotientPattern {
    std::vector<int> integral_at;
    std::vector<Bigint> integral_values;  // aligned with integral_at
    std::vector<Bigint> missing;
};

QuotientPattern quotient_pattern(const std::vector<Bigint>& s);

}  // namespace pncoef::greedy
