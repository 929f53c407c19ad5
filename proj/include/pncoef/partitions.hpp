#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "pncoef/bigint.hpp"
#include "pncoef/detail/visit.hpp"

namespace pncoef {

/// Nonincreasing positive parts.  The empty vector is the partition of 0.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
bool has_distinct_parts(const Partition& p);

/// Transpose of the Young diagram: entry i of the result counts the parts
/// that are >= i.  An involution; distinct parts map to shapes that are
/// nonincreasing with consecutive drops of at most 1, and back.
Partition conjugate(const Partition& p);

Bigint partition_count(int n);
Bigint distinct_partition_count(int n);

namespace detail {

template <typename F>
bool partitions_from(std::vector<int>& parts, int remaining, int max_part, bool distinct, F& f) {
    if (remaining == 0) return invoke_visitor(f, parts);
    if (distinct && static_cast<long long>(remaining) >
                        static_cast<long long>(max_part) * (max_part + 1) / 2)
        return true;
    for (int v = std::min(max_part, remaining); v >= 1; --v) {
        parts.push_back(v);
        if (!partitions_from(parts, remaining - v, distinct ? v - 1 : v, distinct, f)) return false;
        parts.pop_back();
    }
    return true;
}

}  // namespace detail

/// Visits every partition of n, largest parts first (first differing part is
/// larger in earlier output).  The visitor receives a reused buffer; copy to
/// keep.  Bool-returning visitors stop by returning false.
template <typename F>
bool for_each_partition(int n, F&& f) {
    if (n < 0) throw std::invalid_argument("for_each_partition: n must be >= 0");
    std::vector<int> parts;
    return detail::partitions_from(parts, n, n, false, f);
}

/// Same, restricted to partitions with pairwise distinct parts.
template <typename F>
bool for_each_distinct_partition(int n, F&& f) {
    if (n < 0) throw std::invalid_argument("for_each_distinct_partition: n must be >= 0");
    std::vector<int> parts;
    return detail::partitions_from(parts, n, n, true, f);
}

}  // namespace pncoef
