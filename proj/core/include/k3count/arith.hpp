#pragma once

#include <vector>

#include "k3count/rational.hpp"
#include "k3count/series.hpp"

namespace k3count {

// sigma(k) = sum of the positive divisors of k; requires k >= 1.
long long sigma(long long k);

// Number of partitions p(n), by Euler's pentagonal-number recurrence.
// partition_series() below computes the same numbers through the product
// expansion, so each implementation checks the other.
Integer partition(int n);

// prod_{m=1}^{order} (1 - q^m)^{-1}: coefficient n is p(n) for n <= order.
TruncatedSeries partition_series(int order);

// Hermite normal form [[a, b], [0, d]] of a finite-index sublattice of Z^2.
// Every index-N sublattice has exactly one representative with a, d >= 1 and
// 0 <= b < d.
struct HnfMatrix {
    long long a = 1;
    long long b = 0;
    long long d = 1;

    long long index() const { return a * d; }
    bool operator==(const HnfMatrix&) const = default;
};

// All index-`index` sublattices of Z^2, one HNF representative each.
std::vector<HnfMatrix> enumerate_sublattices(long long index);

// Size of enumerate_sublattices(index); classically equal to sigma(index).
long long sublattice_count(long long index);

} // namespace k3count
