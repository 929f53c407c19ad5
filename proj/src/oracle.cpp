#include "pncoef/oracle.hpp"

#include <stdexcept>
#include <utility>

#include "pncoef/errors.hpp"

namespace pncoef::oracle {

SparsePolynomial expand(int n, int bound) {
    if (n < 1) throw std::invalid_argument("expand: n must be >= 1");
    if (n > bound)
        throw budget_error("expand: n = " + std::to_string(n) +
                           " exceeds the expansion bound " + std::to_string(bound));

    SparsePolynomial poly;
    poly.emplace(std::vector<int>{1}, 1);
    for (int k = 2; k <= n; ++k) {
        SparsePolynomial next;
        next.reserve(poly.size() * 2);
        for (const auto& [vec, c] : poly) {
            std::vector<int> key(vec);
            key.push_back(0);
            for (int i = 0; i < k; ++i) {
                ++key[static_cast<std::size_t>(i)];
                next[key] += c;
                --key[static_cast<std::size_t>(i)];
            }
        }
        poly = std::move(next);
    }
    return poly;
}

Bigint evaluate(const SparsePolynomial& poly, const std::vector<int>& point) {
    Bigint total = 0;
    for (const auto& [vec, c] : poly) {
        if (vec.size() != point.size()) throw std::invalid_argument("evaluate: length mismatch");
        Bigint term = c;
        for (std::size_t i = 0; i < vec.size(); ++i) {
            for (int e = 0; e < vec[i]; ++e) term *= point[i];
        }
        total += term;
    }
    return total;
}

}  // namespace pncoef::oracle
