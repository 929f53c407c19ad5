#include "pncoef/bijections.hpp"

#include <stdexcept>

namespace pncoef {

BallotSeq::BallotSeq(std::vector<int> entries) : entries_(std::move(entries)) {
    if (!is_member(entries_)) throw std::invalid_argument("BallotSeq: not a valid sequence");
}

bool BallotSeq::is_member(const std::vector<int>& entries) {
    if (entries.empty()) return false;
    const int n = static_cast<int>(entries.size());
    long long prefix = 0;
    for (int k = 0; k < n; ++k) {
        if (entries[static_cast<std::size_t>(k)] < -1) return false;
        prefix += entries[static_cast<std::size_t>(k)];
        if (k < n - 1 && prefix < 0) return false;
    }
    return prefix == 0;
}

BallotSeq BallotSeq::unchecked(std::vector<int> entries) {
    return BallotSeq(unchecked_t{}, std::move(entries));
}

ChoiceSeq::ChoiceSeq(std::vector<int> indices) : indices_(std::move(indices)) {
    if (!is_member(indices_)) throw std::invalid_argument("ChoiceSeq: index out of range");
}

bool ChoiceSeq::is_member(const std::vector<int>& indices) {
    if (indices.empty()) return false;
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (indices[k] < 1 || indices[k] > static_cast<int>(k) + 1) return false;
    }
    return true;
}

ChoiceSeq ChoiceSeq::unchecked(std::vector<int> indices) {
    return ChoiceSeq(unchecked_t{}, std::move(indices));
}

BallotSeq monomial_to_ballot(const Monomial& a) {
    std::vector<int> b(a.entries());
    for (int& x : b) --x;
    return BallotSeq::unchecked(std::move(b));
}

Monomial ballot_to_monomial(const BallotSeq& b) {
    std::vector<int> a(b.entries());
    for (int& x : a) ++x;
    return Monomial::unchecked(std::move(a));
}

BallotSeq tree_to_ballot(const PlaneTree& t) {
    const int total = t.vertex_count();
    if (total < 2) throw std::invalid_argument("tree_to_ballot: need at least 2 vertices");
    std::vector<int> record;
    record.reserve(static_cast<std::size_t>(total));
    std::vector<int> stack{t.root};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        if (v < 0 || v >= total || static_cast<int>(record.size()) >= total)
            throw std::invalid_argument("tree_to_ballot: malformed tree");
        const auto& kids = t.children[static_cast<std::size_t>(v)];
        record.push_back(static_cast<int>(kids.size()) - 1);
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
    if (static_cast<int>(record.size()) != total)
        throw std::invalid_argument("tree_to_ballot: malformed tree");
    record.pop_back();
    return BallotSeq(std::move(record));
}

PlaneTree ballot_to_tree(const BallotSeq& b) {
    const int n = b.n();
    PlaneTree t;
    t.children.resize(static_cast<std::size_t>(n) + 1);
    // remaining child slots per open vertex, innermost last
    std::vector<std::pair<int, int>> open;
    open.emplace_back(0, b.entries()[0] + 1);
    for (int v = 1; v <= n; ++v) {
        while (!open.empty() && open.back().second == 0) open.pop_back();
        if (open.empty()) throw std::invalid_argument("ballot_to_tree: sequence closes early");
        --open.back().second;
        t.children[static_cast<std::size_t>(open.back().first)].push_back(v);
        const int degree = v < n ? b.entries()[static_cast<std::size_t>(v)] + 1 : 0;
        open.emplace_back(v, degree);
    }
    return t;
}

ChoiceSeq monomial_to_choices(const Monomial& a) {
    const int n = a.n();
    std::vector<int> picks(static_cast<std::size_t>(n));
    int pos = n - 1;
    for (int k = n; k >= 1; --k) {
        for (int copy = 0; copy < a[k - 1]; ++copy) picks[static_cast<std::size_t>(pos--)] = k;
    }
    return ChoiceSeq::unchecked(std::move(picks));
}

Monomial choices_to_monomial(const ChoiceSeq& c) {
    std::vector<int> a(static_cast<std::size_t>(c.n()), 0);
    for (int i : c.indices()) ++a[static_cast<std::size_t>(i - 1)];
    return Monomial(std::move(a));
}

std::unordered_map<std::vector<int>, Bigint, VectorHash> choice_counts(int n) {
    if (n < 1) throw std::invalid_argument("choice_counts: n must be >= 1");
    std::unordered_map<std::vector<int>, Bigint, VectorHash> tally;
    std::vector<int> multiset(static_cast<std::size_t>(n), 0);
    auto walk = [&](auto&& self, int k) -> void {
        if (k > n) {
            ++tally[multiset];
            return;
        }
        for (int i = 1; i <= k; ++i) {
            ++multiset[static_cast<std::size_t>(i - 1)];
            self(self, k + 1);
            --multiset[static_cast<std::size_t>(i - 1)];
        }
    };
    walk(walk, 1);
    return tally;
}

}  // namespace pncoef
