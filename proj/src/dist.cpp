#include "twostop/dist.hpp"

#include "twostop/roots.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace twostop {

PowerLawDist::PowerLawDist(Alpha alpha, double scale)
    : alpha_(alpha), slow_(), support_cap_(1.0), scale_(scale) {
    if (!std::isfinite(scale) || scale <= 0.0)
        throw std::invalid_argument("PowerLawDist: scale must be finite and > 0");
}

PowerLawDist::PowerLawDist(Alpha alpha, SlowFn slow, double slow_bound,
                           double support_cap, double scale)
    : alpha_(alpha), slow_(std::move(slow)), support_cap_(support_cap), scale_(scale) {
    if (!std::isfinite(scale) || scale <= 0.0)
        throw std::invalid_argument("PowerLawDist: scale must be finite and > 0");
    if (!std::isfinite(support_cap) || support_cap <= 0.0)
        throw std::invalid_argument("PowerLawDist: support cap must be finite and > 0");
    if (!std::isfinite(slow_bound) || slow_bound <= 0.0)
        throw std::invalid_argument("PowerLawDist: slowly varying factor must come with a finite bound");
    if (!slow_) throw std::invalid_argument("PowerLawDist: empty slowly varying handle");
}

double PowerLawDist::cdf(double x) const {
    if (x < 0.0) throw std::invalid_argument("cdf: x must be >= 0");
    const double t = x / scale_;
    if (t >= support_cap_) return 1.0;
    if (t <= 0.0) return 0.0;
    double v = std::pow(t, alpha_.value());
    if (slow_) v *= slow_(t);
    return v < 1.0 ? v : 1.0;
}

double PowerLawDist::quantile_unit(double u) const {
    if (!(u > 0.0 && u < 1.0))
        throw std::invalid_argument("quantile: u must lie in (0,1)");
    if (!slow_) return std::pow(u, alpha_.inv());
    // sup{x : F(x) < u}; cdf is monotone so bisection suffices
    return bisect([&](double t) { return cdf(t * scale_) - u; }, 0.0, support_cap_,
                  1e-13);
}

double PowerLawDist::quantile(double u) const { return scale_ * quantile_unit(u); }

double PowerLawDist::sample(UniformStream& rng) const { return quantile(rng.next()); }

void PowerLawDist::sample_batch(UniformStream& rng, std::span<double> out) const {
    for (double& v : out) v = quantile(rng.next());
}

} // namespace twostop
