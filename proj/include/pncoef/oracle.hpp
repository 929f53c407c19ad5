#pragma once

#include <unordered_map>
#include <vector>

#include "pncoef/bigint.hpp"
#include "pncoef/monomial.hpp"

namespace pncoef::oracle {

/// Exponent vector -> coefficient; no zero coefficients stored.
using SparsePolynomial = std::unordered_map<std::vector<int>, Bigint, VectorHash>;

inline constexpr int kDefaultBound = 14;

/// Ground-truth expansion of x_1 (x_1+x_2) ... (x_1+...+x_n), built by
/// multiplying the factors left to right and combining like terms after each
/// step.  Deliberately simple rather than fast.  Throws budget_error when n
/// exceeds the bound (the term count grows like 4^n / n^{3/2}).
SparsePolynomial expand(int n, int bound = kDefaultBound);

/// Exact evaluation by substitution; point length must match the key length.
Bigint evaluate(const SparsePolynomial& poly, const std::vector<int>& point);

}  // namespace pncoef::oracle
