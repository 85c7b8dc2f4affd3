#pragma once

#include <cmath>
#include <stdexcept>

namespace twostop {

/// Shape parameter of the power-law-at-zero family F(x) = x^alpha L(x).
/// Everything downstream keys off this value; construction rejects
/// non-positive or non-finite input.
class Alpha {
public:
    explicit Alpha(double value) : value_(value) {
        if (!std::isfinite(value) || value <= 0.0)
            throw std::invalid_argument("Alpha: shape parameter must be finite and > 0");
    }

    double value() const { return value_; }
    double inv() const { return 1.0 / value_; }

private:
    double value_;
};

} // namespace twostop
