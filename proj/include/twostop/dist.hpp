#pragma once

#include "twostop/alpha.hpp"
#include "twostop/rng.hpp"

#include <cstddef>
#include <functional>
#include <span>

namespace twostop {

/// Distribution with F(x) = (x/scale)^alpha * L(x/scale) near zero, capped at
/// a finite support bound. The default member is the pure case L = 1 with
/// support [0,1]. L is supplied as a bounded handle with L(u) -> 1 as u -> 0;
/// unbounded factors are rejected at construction.
class PowerLawDist {
public:
    using SlowFn = std::function<double(double)>;

    // pure member: F(x) = x^alpha on [0,1]
    explicit PowerLawDist(Alpha alpha, double scale = 1.0);

    // general member with slowly varying factor and a declared bound on L
    PowerLawDist(Alpha alpha, SlowFn slow, double slow_bound, double support_cap,
                 double scale = 1.0);

    const Alpha& alpha() const { return alpha_; }
    double scale() const { return scale_; }
    double support_cap() const { return support_cap_ * scale_; }
    bool pure() const { return !slow_; }

    double cdf(double x) const;

    /// Inverse CDF. Pure members use the closed form u^(1/alpha); general
    /// members bisect the monotone cdf to absolute tolerance 1e-13.
    double quantile(double u) const;

    /// quantile with the scale factored out: quantile(u) = scale * quantile_unit(u)
    /// exactly. The samplers run decisions in unit space so that rescaling a
    /// distribution rescales every payoff exactly.
    double quantile_unit(double u) const;

    double sample(UniformStream& rng) const;
    void sample_batch(UniformStream& rng, std::span<double> out) const;

private:
    Alpha alpha_;
    SlowFn slow_;
    double support_cap_;  // in unscaled units
    double scale_;
};

} // namespace twostop
