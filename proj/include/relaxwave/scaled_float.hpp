#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include "relaxwave/errors.hpp"

namespace relaxwave {

/// Overflow-safe real number stored as mantissa * e^exponent with an integer
/// base-e exponent and |mantissa| in [1, e) (or exactly 0). Quantities that
/// carry factors like e^{b x /(2 a^2 eps)} live in this form so that products
/// and sums combine exponents in log space instead of overflowing a double.
class ScaledFloat {
public:
    ScaledFloat() : mant_(0.0), expo_(0) {}

    static ScaledFloat from_double(double v) {
        ScaledFloat s;
        s.mant_ = v;
        s.expo_ = 0;
        s.normalize();
        return s;
    }

    /// sign * e^{log_magnitude}, exactly representable for any finite exponent.
    static ScaledFloat from_log(double log_magnitude, int sign = 1) {
        ScaledFloat s;
        if (sign == 0) return s;
        double fl = std::floor(log_magnitude);
        s.expo_ = static_cast<std::int64_t>(fl);
        s.mant_ = (sign < 0 ? -1.0 : 1.0) * std::exp(log_magnitude - fl);
        s.normalize();
        return s;
    }

    bool is_zero() const { return mant_ == 0.0; }
    int sign() const { return mant_ > 0.0 ? 1 : (mant_ < 0.0 ? -1 : 0); }
    double mantissa() const { return mant_; }
    std::int64_t exponent() const { return expo_; }

    /// log|value|; -inf for zero.
    double log_abs() const {
        if (is_zero()) return -std::numeric_limits<double>::infinity();
        return std::log(std::abs(mant_)) + static_cast<double>(expo_);
    }

    /// Convert to a plain double. Throws errc::overflow when the value exceeds
    /// the double range; gradual underflow to 0 is silent.
    double to_double() const {
        if (is_zero()) return 0.0;
        double la = log_abs();
        if (la > 709.78) {
            throw Error(errc::overflow, "scaled_float",
                        "value exceeds double range (log|v| = " + std::to_string(la) + ")");
        }
        if (la < -708.0) {
            // subnormal territory; exp() underflows gracefully
            return (mant_ < 0 ? -1.0 : 1.0) * std::exp(la);
        }
        return mant_ * std::exp(static_cast<double>(expo_));
    }

    ScaledFloat operator-() const {
        ScaledFloat r = *this;
        r.mant_ = -r.mant_;
        return r;
    }

    ScaledFloat& operator*=(double k) {
        mant_ *= k;
        normalize();
        return *this;
    }

    ScaledFloat& operator*=(const ScaledFloat& o) {
        if (is_zero() || o.is_zero()) {
            mant_ = 0.0;
            expo_ = 0;
            return *this;
        }
        mant_ *= o.mant_;
        expo_ += o.expo_;
        normalize();
        return *this;
    }

    ScaledFloat& operator+=(const ScaledFloat& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) {
            *this = o;
            return *this;
        }
        // align to the larger exponent; the smaller term is scaled down
        if (expo_ >= o.expo_) {
            std::int64_t d = expo_ - o.expo_;
            if (d < 60) mant_ += o.mant_ * std::exp(-static_cast<double>(d));
        } else {
            std::int64_t d = o.expo_ - expo_;
            if (d < 60) {
                mant_ = o.mant_ + mant_ * std::exp(-static_cast<double>(d));
            } else {
                mant_ = o.mant_;
            }
            expo_ = o.expo_;
        }
        normalize();
        return *this;
    }

    ScaledFloat& operator-=(const ScaledFloat& o) { return *this += (-o); }

    friend ScaledFloat operator*(ScaledFloat a, const ScaledFloat& b) { return a *= b; }
    friend ScaledFloat operator*(ScaledFloat a, double k) { return a *= k; }
    friend ScaledFloat operator*(double k, ScaledFloat a) { return a *= k; }
    friend ScaledFloat operator+(ScaledFloat a, const ScaledFloat& b) { return a += b; }
    friend ScaledFloat operator-(ScaledFloat a, const ScaledFloat& b) { return a -= b; }

private:
    void normalize() {
        if (mant_ == 0.0) {
            expo_ = 0;
            return;
        }
        double am = std::abs(mant_);
        if (am >= 1.0 && am < kE) return;
        double shift = std::floor(std::log(am));
        mant_ *= std::exp(-shift);
        expo_ += static_cast<std::int64_t>(shift);
        // rounding at the bin edge can leave the mantissa one step outside
        am = std::abs(mant_);
        if (am < 1.0) {
            mant_ *= kE;
            expo_ -= 1;
        } else if (am >= kE) {
            mant_ /= kE;
            expo_ += 1;
        }
    }

    static constexpr double kE = 2.718281828459045235;

    double mant_;
    std::int64_t expo_;
};

}  // namespace relaxwave
