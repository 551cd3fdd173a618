#include "parzero/partitions.hpp"

#include <stdexcept>

namespace parzero {

PartitionTable partition_counts(long n_max)
{
    if (n_max < 0) throw std::invalid_argument("partition_counts: n_max must be >= 0");
    PartitionTable t;
    t.n_max = n_max;
    t.p.assign(static_cast<std::size_t>(n_max) + 1, BigInt(0));
    t.p[0] = 1;
    for (long n = 1; n <= n_max; ++n) {
        BigInt s = 0;
        for (long k = 1;; ++k) {
            long g1 = k * (3 * k - 1) / 2;
            if (g1 > n) break;
            long g2 = k * (3 * k + 1) / 2;
            if (k % 2 == 1) {
                s += t.p[static_cast<std::size_t>(n - g1)];
                if (g2 <= n) s += t.p[static_cast<std::size_t>(n - g2)];
            } else {
                s -= t.p[static_cast<std::size_t>(n - g1)];
                if (g2 <= n) s -= t.p[static_cast<std::size_t>(n - g2)];
            }
        }
        t.p[static_cast<std::size_t>(n)] = s;
    }
    return t;
}

PartsTriangle::PartsTriangle(long n_max) : n_max_(n_max)
{
    if (n_max < 1) throw std::invalid_argument("parts_triangle: n_max must be >= 1");
    rows_.resize(static_cast<std::size_t>(n_max) + 1);
    rows_[0] = {BigInt(1)};  // p_0(0) = 1 seed
    for (long n = 1; n <= n_max; ++n) {
        auto& row = rows_[static_cast<std::size_t>(n)];
        row.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
        const auto& prev = rows_[static_cast<std::size_t>(n - 1)];
        for (long k = 1; k <= n; ++k) {
            // p_k(n) = p_{k-1}(n-1) + p_k(n-k)
            if (k - 1 <= n - 1) row[static_cast<std::size_t>(k)] = prev[static_cast<std::size_t>(k - 1)];
            if (k <= n - k)
                row[static_cast<std::size_t>(k)] +=
                    rows_[static_cast<std::size_t>(n - k)][static_cast<std::size_t>(k)];
        }
    }
}

const BigInt& PartsTriangle::at(long n, long k) const
{
    static const BigInt zero = 0;
    if (n < 0 || n > n_max_ || k < 1 || k > n) return zero;
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt PartsTriangle::row_sum(long n) const
{
    BigInt s = 0;
    for (long k = 1; k <= n; ++k) s += at(n, k);
    return s;
}

PartsTriangle parts_triangle(long n_max) { return PartsTriangle(n_max); }

void for_each_partition(long n, const std::function<void(const Partition&)>& visit)
{
    if (n < 1 || n > kEnumerationBound)
        throw std::domain_error("partition enumeration is an oracle bounded to 1 <= n <= 60");
    Partition cur;
    cur.reserve(static_cast<std::size_t>(n));
    // iterative descent: place parts <= bound summing to rem
    std::function<void(long, long)> rec = [&](long rem, long bound) {
        if (rem == 0) {
            visit(cur);
            return;
        }
        for (long p = std::min(rem, bound); p >= 1; --p) {
            cur.push_back(static_cast<int>(p));
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
}

std::vector<Partition> enumerate_partitions(long n)
{
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& lam) { out.push_back(lam); });
    return out;
}

int partition_rank(const Partition& lam)
{
    return lam.front() - static_cast<int>(lam.size());
}

int partition_crank(const Partition& lam)
{
    int ones = 0;
    for (int p : lam)
        if (p == 1) ++ones;
    if (ones == 0) return lam.front();
    int o = 0;
    for (int p : lam)
        if (p > ones) ++o;
    return o - ones;
}

int partition_durfee(const Partition& lam)
{
    int k = 0;
    while (k < static_cast<int>(lam.size()) && lam[static_cast<std::size_t>(k)] >= k + 1) ++k;
    return k;
}

}  // namespace parzero
