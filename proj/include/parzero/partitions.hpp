#pragma once

#include <functional>
#include <vector>

#include "parzero/bigint.hpp"

namespace parzero {

// p[k] = number of partitions of k, k = 0..n_max.
struct PartitionTable {
    long n_max = 0;
    std::vector<BigInt> p;
};

// pk(n, k) = number of partitions of n with exactly k parts, 1 <= k <= n.
// Rows are stored contiguously so parts_poly(n) is a row copy.
class PartsTriangle {
public:
    explicit PartsTriangle(long n_max);
    long n_max() const { return n_max_; }
    const BigInt& at(long n, long k) const;  // 0 outside 1 <= k <= n
    const std::vector<BigInt>& row(long n) const { return rows_[static_cast<std::size_t>(n)]; }
    BigInt row_sum(long n) const;

private:
    long n_max_;
    std::vector<std::vector<BigInt>> rows_;  // rows_[n][k], k = 0..n (k=0 unused except n=0)
};

// Exact p_k for all k <= n_max via the Euler pentagonal-number recurrence.
PartitionTable partition_counts(long n_max);

PartsTriangle parts_triangle(long n_max);

// One partition, parts weakly decreasing.
using Partition = std::vector<int>;

// Brute-force enumeration oracle. Bounded to n <= 60 (p_60 = 966467).
inline constexpr long kEnumerationBound = 60;

// Visit every partition of n exactly once.
void for_each_partition(long n, const std::function<void(const Partition&)>& visit);

// Materialized list; same bound.
std::vector<Partition> enumerate_partitions(long n);

// Statistics of a single partition.
int partition_rank(const Partition& lam);    // largest part - number of parts
int partition_crank(const Partition& lam);   // Andrews-Garvan crank
int partition_durfee(const Partition& lam);  // max k with lam[k-1] >= k

}  // namespace parzero
