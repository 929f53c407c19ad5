#pragma once

#include <string>
#include <vector>

namespace pncoef {

/// Exponent vector (a_1, ..., a_n) of one monomial x_1^{a_1} ... x_n^{a_n}
/// appearing in the expansion of x_1 (x_1+x_2) ... (x_1+...+x_n).
///
/// Membership: all entries nonnegative, entries sum to n, and every prefix
/// (a_1 + ... + a_k) >= k.  The checked constructor enforces this; the
/// enumerator uses the unchecked factory since it only produces members.
class Monomial {
  public:
    explicit Monomial(std::vector<int> entries);

    static bool is_member(const std::vector<int>& entries);
    static Monomial unchecked(std::vector<int> entries);

    /// Parses "(3,2,1,0)", "3,2,1,0" or "3 2 1 0".
    static Monomial parse(const std::string& text);

    int n() const { return static_cast<int>(entries_.size()); }
    const std::vector<int>& entries() const { return entries_; }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }

    /// Display order: at the first index where two vectors differ, the one
    /// with the larger entry comes first.
    bool precedes(const Monomial& other) const;

    std::string to_string() const;

    bool operator==(const Monomial& other) const { return entries_ == other.entries_; }
    bool operator!=(const Monomial& other) const { return entries_ != other.entries_; }

  private:
    struct unchecked_t {};
    Monomial(unchecked_t, std::vector<int> entries) : entries_(std::move(entries)) {}

    std::vector<int> entries_;
};

/// Comparator for the display order, usable with std::sort.
struct MonomialBefore {
    bool operator()(const Monomial& a, const Monomial& b) const { return a.precedes(b); }
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// FNV-1a hash over the entries, for exponent-vector keyed maps.
struct VectorHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 14695981039346656037ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace pncoef
