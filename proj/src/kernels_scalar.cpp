#include "twostop/kernels.hpp"

#include <cmath>

namespace twostop::kernels::scalar {

void iterate_map(std::span<double> g, double alpha) {
    const double p = alpha + 1.0;
    const double inv = 1.0 / p;
    for (double& v : g) v -= std::pow(v, p) * inv;
}

void pow_array(std::span<const double> in, std::span<double> out, double exponent) {
    for (std::size_t i = 0; i < in.size(); ++i) out[i] = std::pow(in[i], exponent);
}

double trapezoid(std::span<const double> x, std::span<const double> y) {
    double acc = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i)
        acc += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
    return acc;
}

double min_value(std::span<const double> v) {
    double m = v[0];
    for (double t : v)
        if (t < m) m = t;
    return m;
}

} // namespace twostop::kernels::scalar
