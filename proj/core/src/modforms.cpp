#include "k3count/modforms.hpp"

#include <stdexcept>

#include "k3count/arith.hpp"

namespace k3count {

TruncatedSeries g2_series(int order)
{
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    c[0] = Rational(-1, 24);
    for (int k = 1; k <= order; ++k)
        c[static_cast<std::size_t>(k)] = sigma(k);
    return TruncatedSeries(std::move(c), order);
}

TruncatedSeries g2_prime_series(int order)
{
    // filled directly as k*sigma(k) q^{k-1}; the unit tests cross-check this
    // against g2_series(order + 1).derivative()
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (int k = 1; k <= order + 1; ++k)
        c[static_cast<std::size_t>(k - 1)] = Rational(k) * sigma(k);
    return TruncatedSeries(std::move(c), order);
}

TruncatedSeries eta_product_inverse(int exponent, int order)
{
    if (exponent < 1)
        throw std::invalid_argument("eta_product_inverse: exponent must be positive");
    TruncatedSeries product = TruncatedSeries::one(order);
    for (int m = 1; m <= order; ++m) {
        std::vector<Rational> factor(static_cast<std::size_t>(order) + 1, Rational(0));
        factor[0] = 1;
        factor[static_cast<std::size_t>(m)] = -1;
        product = product * TruncatedSeries(std::move(factor), order);
    }
    return product.pow(exponent).inverse();
}

TruncatedSeries k3_generating_series(int genus, int order)
{
    if (genus < 0)
        throw std::invalid_argument("k3_generating_series: genus must be non-negative");
    return g2_prime_series(order).pow(genus) * eta_product_inverse(24, order);
}

TruncatedSeries re_generating_series(int genus, int order)
{
    if (genus < 0)
        throw std::invalid_argument("re_generating_series: genus must be non-negative");
    return g2_prime_series(order).pow(genus) * eta_product_inverse(12, order);
}

} // namespace k3count
