#include "k3count/arith.hpp"

#include <mutex>
#include <stdexcept>

namespace k3count {

long long sigma(long long k)
{
    if (k < 1)
        throw std::invalid_argument("sigma: argument must be positive");
    long long sum = 0;
    for (long long d = 1; d * d <= k; ++d) {
        if (k % d != 0)
            continue;
        sum += d;
        if (d != k / d)
            sum += k / d;
    }
    return sum;
}

namespace {

// Shared pentagonal-recurrence table; extended under lock, read by value.
std::mutex partition_mutex;
std::vector<Integer> partition_table = {Integer(1)};

} // namespace

Integer partition(int n)
{
    if (n < 0)
        throw std::invalid_argument("partition: argument must be non-negative");
    std::lock_guard<std::mutex> lock(partition_mutex);
    // p(n) = sum_{k>=1} (-1)^{k-1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]
    while (partition_table.size() <= static_cast<std::size_t>(n)) {
        const long long m = static_cast<long long>(partition_table.size());
        Integer value = 0;
        for (long long k = 1;; ++k) {
            const long long pent1 = k * (3 * k - 1) / 2;
            const long long pent2 = k * (3 * k + 1) / 2;
            if (pent1 > m)
                break;
            const Integer sign = (k % 2 == 1) ? 1 : -1;
            value += sign * partition_table[static_cast<std::size_t>(m - pent1)];
            if (pent2 <= m)
                value += sign * partition_table[static_cast<std::size_t>(m - pent2)];
        }
        partition_table.push_back(value);
    }
    return partition_table[static_cast<std::size_t>(n)];
}

TruncatedSeries partition_series(int order)
{
    // Expand prod (1 - q^m) directly, then invert; factors with m > order
    // only touch coefficients beyond the truncation.
    TruncatedSeries product = TruncatedSeries::one(order);
    for (int m = 1; m <= order; ++m) {
        std::vector<Rational> factor(static_cast<std::size_t>(order) + 1, Rational(0));
        factor[0] = 1;
        factor[static_cast<std::size_t>(m)] = -1;
        product = product * TruncatedSeries(std::move(factor), order);
    }
    return product.inverse();
}

std::vector<HnfMatrix> enumerate_sublattices(long long index)
{
    if (index < 1)
        throw std::invalid_argument("enumerate_sublattices: index must be positive");
    std::vector<HnfMatrix> result;
    for (long long a = 1; a <= index; ++a) {
        if (index % a != 0)
            continue;
        const long long d = index / a;
        for (long long b = 0; b < d; ++b)
            result.push_back(HnfMatrix{a, b, d});
    }
    return result;
}

long long sublattice_count(long long index)
{
    return static_cast<long long>(enumerate_sublattices(index).size());
}

} // namespace k3count
