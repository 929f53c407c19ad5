#include "pncoef/monomial.hpp"

#include <sstream>
#include <stdexcept>

namespace pncoef {

Monomial::Monomial(std::vector<int> entries) : entries_(std::move(entries)) {
    if (!is_member(entries_))
        throw std::invalid_argument("Monomial: not a valid exponent vector: " + to_string());
}

bool Monomial::is_member(const std::vector<int>& entries) {
    if (entries.empty()) return false;
    const int n = static_cast<int>(entries.size());
    long long prefix = 0;
    for (int k = 0; k < n; ++k) {
        if (entries[static_cast<std::size_t>(k)] < 0) return false;
        prefix += entries[static_cast<std::size_t>(k)];
        if (prefix < k + 1) return false;
    }
    return prefix == n;
}

Monomial Monomial::unchecked(std::vector<int> entries) {
    return Monomial(unchecked_t{}, std::move(entries));
}

Monomial Monomial::parse(const std::string& text) {
    std::string cleaned;
    cleaned.reserve(text.size());
    for (char c : text) {
        if (c == '(' || c == ')' || c == '[' || c == ']') continue;
        cleaned.push_back(c == ',' ? ' ' : c);
    }
    std::istringstream in(cleaned);
    std::vector<int> entries;
    int v;
    while (in >> v) entries.push_back(v);
    if (!in.eof()) throw std::invalid_argument("Monomial::parse: bad input: " + text);
    return Monomial(std::move(entries));
}

bool Monomial::precedes(const Monomial& other) const {
    MonomialBefore cmp;
    return cmp(entries_, other.entries_);
}

bool MonomialBefore::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    const std::size_t m = a.size() < b.size() ? a.size() : b.size();
    for (std::size_t i = 0; i < m; ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return a.size() < b.size();
}

std::string Monomial::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(entries_[i]);
    }
    s += ")";
    return s;
}

}  // namespace pncoef
