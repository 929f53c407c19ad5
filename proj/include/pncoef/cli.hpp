#pragma once

#include <iosfwd>
#include <string>

#include "pncoef/maxsearch.hpp"
#include "pncoef/oracle.hpp"

namespace pncoef::cli {

enum class Format { text, csv, json, bfile };

Format parse_format(const std::string& name);

struct Options {
    int threads = 0;  // 0 = machine parallelism
    int oracle_bound = oracle::kDefaultBound;
    SearchBudget budget;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// Rows 1..n of the coefficient triangle.  text: one line of coefficients
/// per row; csv: n,index,coefficient,monomial; json: row objects; bfile:
/// "index value" over the concatenated rows.
int cmd_triangle(int n, Format format, const Options& opts, std::ostream& out,
                 std::ostream& err);

/// Full identity, oracle and round-trip suite for rows 1..n_max.  Prints one
/// line per check; returns kExitVerifyFail when anything fails.
int cmd_verify(int n_max, const Options& opts, std::ostream& out, std::ostream& err);

/// Maximal coefficient of row n (or rows 1..n with upto), with the attaining
/// monomials and, for consecutive runs, the reduced quotient column.
int cmd_max(int n, bool upto, SearchMethod method, bool all_argmax, Format format,
            const Options& opts, std::ostream& out, std::ostream& err);

/// The growth procedure up to length l: rows (n, s_n, r_n) plus the integral
/// quotient pattern.  trace_length > 0 additionally prints every candidate
/// with its coefficient at that step.  coefficients_only drops the monomial
/// column (and the stored monomials).
int cmd_greedy(int l, Format format, bool coefficients_only, int trace_length,
               const Options& opts, std::ostream& out, std::ostream& err);

/// The correspondence table for size n: exponent vector, shifted ballot
/// sequence, plane tree (balanced parentheses), and pick sequence.
int cmd_bijection(int n, Format format, const Options& opts, std::ostream& out,
                  std::ostream& err);

}  // namespace pncoef::cli
