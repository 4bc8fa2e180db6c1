#include "interlink/power_series.hpp"

#include <algorithm>
#include <utility>

#include "interlink/errors.hpp"

namespace interlink
{

std::string to_string(const BigCount& value)
{
    return value.get_str();
}

std::string to_string(const BigRational& value)
{
    BigRational canonical(value);
    canonical.canonicalize();
    return canonical.get_str();
}

TruncatedPowerSeries::TruncatedPowerSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedPowerSeries::TruncatedPowerSeries(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw ArgumentError("a truncated power series needs at least one coefficient");
    }
    for (auto& c : coeffs_) {
        c.canonicalize();
    }
}

TruncatedPowerSeries TruncatedPowerSeries::monomial(std::size_t order, const BigRational& c, std::size_t power)
{
    TruncatedPowerSeries result(order);
    if (power <= order) {
        result.coeffs_[power] = c;
    }
    return result;
}

void TruncatedPowerSeries::set(std::size_t k, BigRational value)
{
    value.canonicalize();
    coeffs_.at(k) = std::move(value);
}

bool TruncatedPowerSeries::is_zero() const
{
    return is_zero_through(order());
}

bool TruncatedPowerSeries::is_zero_through(std::size_t order) const
{
    const std::size_t last = std::min(order, this->order());
    for (std::size_t k = 0; k <= last; ++k) {
        if (sgn(coeffs_[k]) != 0) {
            return false;
        }
    }
    return true;
}

TruncatedPowerSeries TruncatedPowerSeries::truncated(std::size_t new_order) const
{
    if (new_order > order()) {
        throw ArgumentError("cannot truncate a series of order " + std::to_string(order()) + " to order "
                            + std::to_string(new_order));
    }
    return TruncatedPowerSeries(std::vector<BigRational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

TruncatedPowerSeries TruncatedPowerSeries::extended(std::size_t new_order) const
{
    auto coeffs = coeffs_;
    coeffs.resize(std::max(new_order, order()) + 1);
    return TruncatedPowerSeries(std::move(coeffs));
}

TruncatedPowerSeries TruncatedPowerSeries::derivative() const
{
    if (order() == 0) {
        throw ArgumentError("the derivative of an order-0 series is not determined");
    }
    TruncatedPowerSeries result(order() - 1);
    for (std::size_t k = 1; k <= order(); ++k) {
        result.coeffs_[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
    }
    return result;
}

TruncatedPowerSeries TruncatedPowerSeries::substitute_monomial(const BigRational& c, std::size_t power) const
{
    if (power == 0) {
        throw ArgumentError("substitution requires a positive power");
    }
    TruncatedPowerSeries result(order() * power);
    BigRational scale = 1;
    for (std::size_t k = 0; k <= order(); ++k) {
        result.coeffs_[k * power] = coeffs_[k] * scale;
        scale *= c;
    }
    return result;
}

TruncatedPowerSeries TruncatedPowerSeries::reciprocal() const
{
    if (sgn(coeffs_[0]) == 0) {
        throw ArgumentError("series with zero constant term has no reciprocal");
    }
    TruncatedPowerSeries result(order());
    const BigRational inv0 = 1 / coeffs_[0];
    result.coeffs_[0] = inv0;
    for (std::size_t n = 1; n <= order(); ++n) {
        BigRational acc = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            acc += coeffs_[k] * result.coeffs_[n - k];
        }
        result.coeffs_[n] = -acc * inv0;
    }
    return result;
}

TruncatedPowerSeries TruncatedPowerSeries::pow(std::size_t exponent) const
{
    auto result = monomial(order(), 1, 0);
    auto base = *this;
    while (exponent > 0) {
        if (exponent & 1U) {
            result = result * base;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base = base * base;
        }
    }
    return result;
}

TruncatedPowerSeries TruncatedPowerSeries::operator-() const
{
    auto result = *this;
    for (auto& c : result.coeffs_) {
        c = -c;
    }
    return result;
}

TruncatedPowerSeries& TruncatedPowerSeries::operator+=(const TruncatedPowerSeries& rhs)
{
    coeffs_.resize(std::min(order(), rhs.order()) + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += rhs.coeffs_[k];
    }
    return *this;
}

TruncatedPowerSeries& TruncatedPowerSeries::operator-=(const TruncatedPowerSeries& rhs)
{
    coeffs_.resize(std::min(order(), rhs.order()) + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] -= rhs.coeffs_[k];
    }
    return *this;
}

TruncatedPowerSeries& TruncatedPowerSeries::operator*=(const BigRational& scalar)
{
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

TruncatedPowerSeries operator+(TruncatedPowerSeries lhs, const TruncatedPowerSeries& rhs)
{
    lhs += rhs;
    return lhs;
}

TruncatedPowerSeries operator-(TruncatedPowerSeries lhs, const TruncatedPowerSeries& rhs)
{
    lhs -= rhs;
    return lhs;
}

TruncatedPowerSeries operator*(const TruncatedPowerSeries& lhs, const TruncatedPowerSeries& rhs)
{
    const std::size_t order = std::min(lhs.order(), rhs.order());
    TruncatedPowerSeries result(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (sgn(lhs.coeffs_[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (sgn(rhs.coeffs_[j]) != 0) {
                result.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
            }
        }
    }
    return result;
}

TruncatedPowerSeries operator*(TruncatedPowerSeries lhs, const BigRational& scalar)
{
    lhs *= scalar;
    return lhs;
}

TruncatedPowerSeries operator*(const BigRational& scalar, TruncatedPowerSeries rhs)
{
    rhs *= scalar;
    return rhs;
}

bool operator==(const TruncatedPowerSeries& lhs, const TruncatedPowerSeries& rhs)
{
    return lhs.coeffs_ == rhs.coeffs_;
}

} // namespace interlink
