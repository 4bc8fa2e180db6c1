#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace interlink
{

using BigCount = mpz_class;
using BigRational = mpq_class;

std::string to_string(const BigCount& value);
std::string to_string(const BigRational& value);

/**
 * Power series c_0 + c_1 s + ... + c_N s^N known exactly up to order N.
 *
 * Every operation returns a series whose coefficients are exact up to the
 * returned order; binary operations on series of different orders truncate to
 * the smaller one. Coefficients are canonical GMP rationals.
 */
class TruncatedPowerSeries
{
public:
    // The zero series to the given order.
    explicit TruncatedPowerSeries(std::size_t order);
    // Order is coeffs.size() - 1; an empty list is an ArgumentError.
    explicit TruncatedPowerSeries(std::vector<BigRational> coeffs);

    // c * s^power, truncated to `order` (zero if power > order).
    static TruncatedPowerSeries monomial(std::size_t order, const BigRational& c, std::size_t power);

    std::size_t order() const { return coeffs_.size() - 1; }
    const BigRational& operator[](std::size_t k) const { return coeffs_.at(k); }
    void set(std::size_t k, BigRational value);
    std::span<const BigRational> coefficients() const { return coeffs_; }

    bool is_zero() const;
    // True when every coefficient up to and including `order` vanishes.
    bool is_zero_through(std::size_t order) const;

    // Requires new_order <= order().
    TruncatedPowerSeries truncated(std::size_t new_order) const;
    // Pads with zeros, i.e. treats *this as an exact polynomial.
    TruncatedPowerSeries extended(std::size_t new_order) const;

    // d/ds; the result has order order() - 1. Throws ArgumentError on a constant series.
    TruncatedPowerSeries derivative() const;
    // f(c * s^power). The result has order order() * power.
    TruncatedPowerSeries substitute_monomial(const BigRational& c, std::size_t power) const;
    // 1/f; requires c_0 != 0.
    TruncatedPowerSeries reciprocal() const;
    TruncatedPowerSeries pow(std::size_t exponent) const;

    TruncatedPowerSeries operator-() const;
    TruncatedPowerSeries& operator+=(const TruncatedPowerSeries& rhs);
    TruncatedPowerSeries& operator-=(const TruncatedPowerSeries& rhs);
    TruncatedPowerSeries& operator*=(const BigRational& scalar);

    friend TruncatedPowerSeries operator+(TruncatedPowerSeries lhs, const TruncatedPowerSeries& rhs);
    friend TruncatedPowerSeries operator-(TruncatedPowerSeries lhs, const TruncatedPowerSeries& rhs);
    friend TruncatedPowerSeries operator*(const TruncatedPowerSeries& lhs, const TruncatedPowerSeries& rhs);
    friend TruncatedPowerSeries operator*(TruncatedPowerSeries lhs, const BigRational& scalar);
    friend TruncatedPowerSeries operator*(const BigRational& scalar, TruncatedPowerSeries rhs);

    friend bool operator==(const TruncatedPowerSeries& lhs, const TruncatedPowerSeries& rhs);

private:
    std::vector<BigRational> coeffs_;
};

// Outcome of substituting a candidate series into an identity that must hold exactly.
struct ResidualSeries
{
    TruncatedPowerSeries residual;
    // Coefficients of order <= certified_order are asserted to vanish;
    // anything above it may be a truncation artefact.
    std::size_t certified_order;

    bool vanishes() const { return residual.is_zero_through(certified_order); }
};

} // namespace interlink
