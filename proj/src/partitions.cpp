#include "pncoef/partitions.hpp"

namespace pncoef {

bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

bool has_distinct_parts(const Partition& p) {
    if (!is_partition(p)) return false;
    for (std::size_t i = 1; i < p.size(); ++i) {
        if (p[i] == p[i - 1]) return false;
    }
    return true;
}

Partition conjugate(const Partition& p) {
    if (!is_partition(p)) throw std::invalid_argument("conjugate: not a partition");
    if (p.empty()) return {};
    Partition result(static_cast<std::size_t>(p[0]));
    for (int i = 1; i <= p[0]; ++i) {
        int count = 0;
        for (int part : p) {
            if (part >= i) ++count;
        }
        result[static_cast<std::size_t>(i - 1)] = count;
    }
    return result;
}

namespace {

Bigint count_partitions(int n, bool distinct) {
    if (n < 0) throw std::invalid_argument("partition count: n must be >= 0");
    std::vector<Bigint> ways(static_cast<std::size_t>(n) + 1);
    ways[0] = 1;
    for (int part = 1; part <= n; ++part) {
        if (distinct) {
            for (int total = n; total >= part; --total)
                ways[static_cast<std::size_t>(total)] +=
                    ways[static_cast<std::size_t>(total - part)];
        } else {
            for (int total = part; total <= n; ++total)
                ways[static_cast<std::size_t>(total)] +=
                    ways[static_cast<std::size_t>(total - part)];
        }
    }
    return ways[static_cast<std::size_t>(n)];
}

}  // namespace

Bigint partition_count(int n) { return count_partitions(n, false); }

Bigint distinct_partition_count(int n) { return count_partitions(n, true); }

}  // namespace pncoef
