#pragma once

#include <cmath>
#include <complex>

namespace interlink
{

// Neumaier (improved Kahan) summation.
class CompensatedSum
{
public:
    void add(double x)
    {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            carry_ += (sum_ - t) + x;
        } else {
            carry_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

class ComplexCompensatedSum
{
public:
    void add(std::complex<double> z)
    {
        re_.add(z.real());
        im_.add(z.imag());
    }

    std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
    CompensatedSum re_;
    CompensatedSum im_;
};

} // namespace interlink
