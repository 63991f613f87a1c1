#include "k3count/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace k3count {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, int order)
    : coeffs_(std::move(coeffs))
{
    if (order < 0)
        throw std::invalid_argument("TruncatedSeries: order must be non-negative");
    if (coeffs_.size() != static_cast<std::size_t>(order) + 1)
        throw std::invalid_argument("TruncatedSeries: need exactly order+1 coefficients");
}

TruncatedSeries TruncatedSeries::constant(const Rational& value, int order)
{
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
    c[0] = value;
    return TruncatedSeries(std::move(c), order);
}

TruncatedSeries TruncatedSeries::q(int order)
{
    if (order < 1)
        throw std::invalid_argument("TruncatedSeries::q: order must be at least 1");
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
    c[1] = 1;
    return TruncatedSeries(std::move(c), order);
}

const Rational& TruncatedSeries::coeff(int n) const
{
    if (n < 0 || n > order())
        throw std::out_of_range("TruncatedSeries::coeff: index outside truncation order");
    return coeffs_[static_cast<std::size_t>(n)];
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const
{
    if (new_order < 0 || new_order > order())
        throw std::invalid_argument("TruncatedSeries::truncated: bad order");
    std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + new_order + 1);
    return TruncatedSeries(std::move(c), new_order);
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        c[static_cast<std::size_t>(i)] = a.coeff(i) + b.coeff(i);
    return TruncatedSeries(std::move(c), n);
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        c[static_cast<std::size_t>(i)] = a.coeff(i) - b.coeff(i);
    return TruncatedSeries(std::move(c), n);
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i) == 0)
            continue;
        for (int j = 0; i + j <= n; ++j)
            c[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    }
    return TruncatedSeries(std::move(c), n);
}

TruncatedSeries TruncatedSeries::pow(int exponent) const
{
    if (exponent < 0)
        throw std::invalid_argument("TruncatedSeries::pow: exponent must be non-negative");
    TruncatedSeries result = one(order());
    TruncatedSeries base = *this;
    // binary exponentiation; every intermediate stays at this order
    for (int e = exponent; e > 0; e >>= 1) {
        if (e & 1)
            result = result * base;
        if (e > 1)
            base = base * base;
    }
    return result;
}

TruncatedSeries TruncatedSeries::inverse() const
{
    if (coeffs_[0] == 0)
        throw std::domain_error("TruncatedSeries::inverse: constant term is zero");
    const int n = order();
    std::vector<Rational> b(static_cast<std::size_t>(n) + 1, Rational(0));
    b[0] = Rational(1) / coeffs_[0];
    // a*b = 1: b_k = -(sum_{i=1..k} a_i b_{k-i}) / a_0
    for (int k = 1; k <= n; ++k) {
        Rational acc(0);
        for (int i = 1; i <= k; ++i)
            acc += coeffs_[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(k - i)];
        b[static_cast<std::size_t>(k)] = -acc / coeffs_[0];
    }
    return TruncatedSeries(std::move(b), n);
}

TruncatedSeries TruncatedSeries::derivative() const
{
    if (order() == 0)
        throw std::domain_error("TruncatedSeries::derivative: order 0 has no derivative order");
    const int n = order() - 1;
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        c[static_cast<std::size_t>(k)] = Rational(k + 1) * coeffs_[static_cast<std::size_t>(k) + 1];
    return TruncatedSeries(std::move(c), n);
}

std::string TruncatedSeries::to_string() const
{
    std::ostringstream out;
    for (int k = 0; k <= order(); ++k) {
        if (k > 0)
            out << " + ";
        out << coeff(k).str();
        if (k == 1)
            out << "*q";
        else if (k > 1)
            out << "*q^" << k;
    }
    return out.str();
}

} // namespace k3count
