#include "pncoef/greedy.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pncoef/core.hpp"
#include "pncoef/maxsearch.hpp"

namespace pncoef::greedy {

std::vector<Monomial> candidates(const Monomial& r) {
    if (!is_stair(r.entries()))
        throw std::invalid_argument("candidates: previous monomial is not a staircase member");
    const int n = r.n() + 1;
    std::vector<int> rp(r.entries());
    rp.push_back(0);

    std::vector<Monomial> out;
    for (int i = n; i >= 1; --i) {
        bool rises;
        if (i == n)
            rises = rp[static_cast<std::size_t>(n - 1)] != rp[static_cast<std::size_t>(n - 2)];
        else if (i > 1)
            rises = rp[static_cast<std::size_t>(i - 1)] != rp[static_cast<std::size_t>(i - 2)] &&
                    rp[static_cast<std::size_t>(i - 1)] == rp[static_cast<std::size_t>(i)];
        else
            rises = rp[0] == rp[1];
        if (!rises) continue;
        std::vector<int> cand(rp);
        ++cand[static_cast<std::size_t>(i - 1)];
        if (!is_stair(cand)) throw std::logic_error("candidates: produced a non-staircase vector");
        out.push_back(Monomial::unchecked(std::move(cand)));
    }
    if (out.empty()) throw std::logic_error("candidates: empty candidate list");
    return out;
}

Step grow_step(const Monomial& previous, const BinomialTable& binom) {
    Step step;
    step.candidates = candidates(previous);
    step.coefficients.reserve(step.candidates.size());
    for (const Monomial& c : step.candidates)
        step.coefficients.push_back(coefficient(c, binom));
    step.selected = 0;
    for (std::size_t i = 1; i < step.coefficients.size(); ++i) {
        if (step.coefficients[i] > step.coefficients[static_cast<std::size_t>(step.selected)])
            step.selected = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < step.coefficients.size(); ++i) {
        if (static_cast<int>(i) != step.selected &&
            step.coefficients[i] == step.coefficients[static_cast<std::size_t>(step.selected)]) {
            step.tie = true;
            break;
        }
    }
    return step;
}

GreedyRun run(int l, bool keep_monomials) {
    if (l < 1) throw std::invalid_argument("run: l must be >= 1");
    GreedyRun out;
    out.s.reserve(static_cast<std::size_t>(l));

    Monomial r = Monomial::unchecked({1});
    out.s.push_back(1);
    if (keep_monomials) out.r.push_back(r);

    const BinomialTable binom(l);
    for (int n = 2; n <= l; ++n) {
        Step step = grow_step(r, binom);
        r = step.candidates[static_cast<std::size_t>(step.selected)];
        out.s.push_back(step.coefficients[static_cast<std::size_t>(step.selected)]);
        if (step.tie) out.tie_steps.push_back(n);
        if (keep_monomials) out.r.push_back(r);
    }
    return out;
}

QuotientPattern quotient_pattern(const std::vector<Bigint>& s) {
    if (s.empty()) throw std::invalid_argument("quotient_pattern: empty sequence");
    for (const Bigint& v : s) {
        if (v <= 0) throw std::invalid_argument("quotient_pattern: values must be positive");
    }
    QuotientPattern pattern;
    std::set<Bigint> attained;
    for (std::size_t t = 0; t + 1 < s.size(); ++t) {
        if (s[t + 1] % s[t] != 0) continue;
        pattern.integral_at.push_back(static_cast<int>(t) + 1);
        pattern.integral_values.push_back(s[t + 1] / s[t]);
        attained.insert(pattern.integral_values.back());
    }
    if (!attained.empty()) {
        const Bigint& top = *attained.rbegin();
        for (Bigint q = 1; q <= top; ++q) {
            if (!attained.count(q)) pattern.missing.push_back(q);
        }
    }
    return pattern;
}

}  // namespace pncoef::greedy
