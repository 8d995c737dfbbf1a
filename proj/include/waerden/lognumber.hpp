#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

namespace waerden {

/// Magnitude of a positive number that may be far beyond floating range,
/// stored as the d-fold exponential exp^d(x) of a double.  The form is kept
/// normalized: either d == 0 (x is the plain value) or x > ln(DBL_MAX), so
/// comparing two numbers is a lexicographic comparison of (d, x).
///
/// Iterated exponentials with base 2 are folded into this form by turning
/// the factor ln 2 into an additive ln ln 2 one level up; corrections more
/// than two levels down are below double precision and are dropped.
class LogNumber {
public:
    LogNumber() : depth_(0), x_(1) {}

    static LogNumber from_value(double v) {
        if (!(v > 0) || !std::isfinite(v)) throw std::invalid_argument("LogNumber: need a finite positive value");
        return LogNumber(0, v);
    }

    /// The number e^ln_v.
    static LogNumber from_ln(double ln_v) {
        if (!std::isfinite(ln_v)) throw std::invalid_argument("LogNumber: non-finite logarithm");
        return LogNumber(1, ln_v);
    }

    /// base^exponent for an ordinary real exponent.
    static LogNumber power(double base, double exponent) {
        if (!(base > 0)) throw std::invalid_argument("LogNumber: power needs base > 0");
        return from_ln(exponent * std::log(base));
    }

    /// e^x where x is itself a LogNumber.
    static LogNumber exp_of(const LogNumber& x) { return LogNumber(x.depth_ + 1, x.x_); }

    /// base^x where x is itself a LogNumber; base must exceed 1.
    static LogNumber pow_of(double base, const LogNumber& x) {
        if (!(base > 1)) throw std::invalid_argument("LogNumber: pow_of needs base > 1");
        const double lnb = std::log(base);
        if (x.depth_ == 0) return from_ln(x.x_ * lnb);
        if (x.depth_ == 1) return LogNumber(2, x.x_ + std::log(lnb));
        return LogNumber(x.depth_ + 1, x.x_);  // the ln ln(base) correction is negligible here
    }

    /// base^(base^(...^(base^top))) with `height` exponentiations.
    static LogNumber tower(double base, int height, double top) {
        if (height < 0) throw std::invalid_argument("LogNumber: tower height must be >= 0");
        LogNumber cur = from_value(top);
        for (int i = 0; i < height; ++i) cur = pow_of(base, cur);
        return cur;
    }

    /// Iterated-exponential depth of the normal form (0 for plain values).
    int depth() const { return depth_; }
    /// The innermost coordinate: the value itself when depth() == 0,
    /// otherwise the depth()-fold logarithm of the number.
    double x() const { return x_; }

    bool representable() const { return depth_ == 0; }

    double value() const {
        if (depth_ != 0) throw std::domain_error("LogNumber: value out of floating range");
        return x_;
    }

    double ln() const {
        if (depth_ == 0) return std::log(x_);
        if (depth_ == 1) return x_;
        throw std::domain_error("LogNumber: logarithm out of floating range");
    }

    int compare(const LogNumber& o) const {
        if (depth_ != o.depth_) return depth_ < o.depth_ ? -1 : 1;
        if (x_ != o.x_) return x_ < o.x_ ? -1 : 1;
        return 0;
    }

    bool operator<(const LogNumber& o) const { return compare(o) < 0; }
    bool operator>(const LogNumber& o) const { return compare(o) > 0; }
    bool operator<=(const LogNumber& o) const { return compare(o) <= 0; }
    bool operator>=(const LogNumber& o) const { return compare(o) >= 0; }
    bool operator==(const LogNumber& o) const { return compare(o) == 0; }
    bool operator!=(const LogNumber& o) const { return compare(o) != 0; }

    std::string str() const {
        char buf[64];
        if (depth_ == 0)
            std::snprintf(buf, sizeof buf, "%.6g", x_);
        else if (depth_ == 1)
            std::snprintf(buf, sizeof buf, "10^%.6g", x_ / std::log(10.0));
        else
            std::snprintf(buf, sizeof buf, "exp^%d(%.6g)", depth_, x_);
        return buf;
    }

private:
    LogNumber(int depth, double x) : depth_(depth), x_(x) { normalize(); }

    void normalize() {
        static const double kLnMax = std::log(std::numeric_limits<double>::max());
        while (depth_ > 0 && x_ <= kLnMax) {
            x_ = std::exp(x_);
            --depth_;
        }
    }

    int depth_;
    double x_;
};

}  // namespace waerden
