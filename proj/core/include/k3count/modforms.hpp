#pragma once

#include "k3count/series.hpp"

namespace k3count {

// G_2(q) = -1/24 + sum_{k>=1} sigma(k) q^k, the weight-2 Eisenstein series
// q-expansion (the lone non-integer coefficient in the whole computation).
TruncatedSeries g2_series(int order);

// d/dq G_2 = sum_{k>=1} k sigma(k) q^{k-1}.
TruncatedSeries g2_prime_series(int order);

// prod_{m=1}^{order} (1 - q^m)^{-exponent}, exponent >= 1. Exponent 24 is
// q/Delta(q); exponent 12 is its exact square root; exponent 1 is the
// partition generating function.
TruncatedSeries eta_product_inverse(int exponent, int order);

// sum_n N_g(n) q^n for the K3 surface:
//   (d/dq G_2)^g * prod (1 - q^m)^{-24}.
TruncatedSeries k3_generating_series(int genus, int order);

// sum_n N_g(C_n) q^n for the rational elliptic surface:
//   (d/dq G_2)^g * prod (1 - q^m)^{-12}.
// The -12 product is the exact square root of q/Delta; no numeric square
// root is ever taken.
TruncatedSeries re_generating_series(int genus, int order);

} // namespace k3count
