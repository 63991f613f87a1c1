#pragma once

#include <string>
#include <vector>

#include "k3count/rational.hpp"

namespace k3count {

// Formal power series in q truncated at a fixed order: exact rational
// coefficients of q^0 .. q^order. Binary operations truncate to the minimum
// order of the two operands, so precision never silently inflates. Values
// are immutable after construction and safe to share across threads.
class TruncatedSeries {
public:
    // coeffs.size() must equal order + 1.
    TruncatedSeries(std::vector<Rational> coeffs, int order);

    static TruncatedSeries constant(const Rational& value, int order);
    static TruncatedSeries zero(int order) { return constant(0, order); }
    static TruncatedSeries one(int order) { return constant(1, order); }
    // The monomial q; requires order >= 1.
    static TruncatedSeries q(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    // n must lie in [0, order].
    const Rational& coeff(int n) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    // Copy truncated to a lower (or equal) order.
    TruncatedSeries truncated(int order) const;

    // a * a * ... * a (exponent factors); exponent 0 gives the constant 1.
    TruncatedSeries pow(int exponent) const;

    // Multiplicative inverse up to the truncation order, by the recursive
    // coefficient solve. The constant term must be nonzero.
    TruncatedSeries inverse() const;

    // Formal d/dq; the order drops by one, so order 0 input is an error.
    TruncatedSeries derivative() const;

    bool operator==(const TruncatedSeries& other) const = default;

    // "c0 + c1*q + c2*q^2 + ..." with exact "p/q" fractions.
    std::string to_string() const;

private:
    std::vector<Rational> coeffs_;
};

// Coefficientwise sum/difference and Cauchy product, truncated to
// min(a.order, b.order).
TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

} // namespace k3count
