#pragma once

#include <unordered_map>
#include <vector>

#include "pncoef/bigint.hpp"
#include "pncoef/monomial.hpp"

namespace pncoef {

/// Ballot-type sequence (b_1, ..., b_n): entries >= -1, every proper prefix
/// sum >= 0, total 0.  The componentwise shift a_i - 1 of a Monomial.
class BallotSeq {
  public:
    explicit BallotSeq(std::vector<int> entries);

    static bool is_member(const std::vector<int>& entries);
    static BallotSeq unchecked(std::vector<int> entries);

    int n() const { return static_cast<int>(entries_.size()); }
    const std::vector<int>& entries() const { return entries_; }

    bool operator==(const BallotSeq& other) const { return entries_ == other.entries_; }

  private:
    struct unchecked_t {};
    BallotSeq(unchecked_t, std::vector<int> entries) : entries_(std::move(entries)) {}

    std::vector<int> entries_;
};

/// Rooted tree with ordered child lists.  Vertices are numbered 0..n by
/// depth-first discovery order when produced by ballot_to_tree; tree_to_ballot
/// traverses explicitly and accepts any numbering.
struct PlaneTree {
    std::vector<std::vector<int>> children;
    int root = 0;

    int vertex_count() const { return static_cast<int>(children.size()); }
    bool operator==(const PlaneTree& other) const = default;
};

/// Factor-by-factor variable pick (i_1, ..., i_n) with 1 <= i_k <= k:
/// i_k names the variable taken from the k-th factor.
class ChoiceSeq {
  public:
    explicit ChoiceSeq(std::vector<int> indices);

    static bool is_member(const std::vector<int>& indices);
    static ChoiceSeq unchecked(std::vector<int> indices);

    int n() const { return static_cast<int>(indices_.size()); }
    const std::vector<int>& indices() const { return indices_; }

    bool operator==(const ChoiceSeq& other) const { return indices_ == other.indices_; }

  private:
    struct unchecked_t {};
    ChoiceSeq(unchecked_t, std::vector<int> indices) : indices_(std::move(indices)) {}

    std::vector<int> indices_;
};

BallotSeq monomial_to_ballot(const Monomial& a);
Monomial ballot_to_monomial(const BallotSeq& b);

/// Depth-first walk recording (number of children - 1) per visited vertex,
/// dropping the last vertex (always a leaf).
BallotSeq tree_to_ballot(const PlaneTree& t);

/// Inverse decoding: entry b_i says the i-th vertex in discovery order has
/// b_i + 1 children; the final vertex has none.  A stack of vertices with
/// unfilled child slots reconstructs the tree.
PlaneTree ballot_to_tree(const BallotSeq& b);

/// Canonical pick sequence for a monomial: positions are filled back to
/// front, writing a_k copies of k for k = n..1.  The value multiset has
/// exactly a_j copies of j and i_k <= k always holds.
ChoiceSeq monomial_to_choices(const Monomial& a);

/// Value multiset of a pick sequence, as an exponent vector.
Monomial choices_to_monomial(const ChoiceSeq& c);

/// Walks all n! pick sequences and tallies them by value multiset.  The tally
/// of each exponent vector equals its coefficient, which makes this a second
/// independent ground truth (practical for n <= 9).
std::unordered_map<std::vector<int>, Bigint, VectorHash> choice_counts(int n);

}  // namespace pncoef
