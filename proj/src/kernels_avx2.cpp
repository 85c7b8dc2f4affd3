#include "twostop/kernels.hpp"

#if defined(TWOSTOP_HAVE_AVX2)

#include <cmath>
#include <immintrin.h>

namespace twostop::kernels::avx2 {
namespace {

// x^p splits into three cases: small integer exponents go through
// multiply-by-squaring, half-integers add one _mm256_sqrt_pd, and anything
// else falls back to per-lane libm pow (the surrounding arithmetic still
// runs packed).
struct PowPlan {
    enum class Kind { IntExp, HalfExp, Libm } kind;
    unsigned iexp = 0;   // |exponent| rounded down for Int/Half
    bool reciprocal = false;
    double exponent = 0.0;
};

PowPlan make_plan(double p) {
    PowPlan plan;
    plan.exponent = p;
    plan.reciprocal = p < 0.0;
    const double q = std::fabs(p);
    const double r = std::nearbyint(q);
    const double r2 = std::nearbyint(2.0 * q);
    if (q == r && r <= 64.0) {
        plan.kind = PowPlan::Kind::IntExp;
        plan.iexp = static_cast<unsigned>(r);
    } else if (2.0 * q == r2 && q < 64.0) {
        plan.kind = PowPlan::Kind::HalfExp;
        plan.iexp = static_cast<unsigned>(std::floor(q));
    } else {
        plan.kind = PowPlan::Kind::Libm;
    }
    return plan;
}

inline __m256d int_pow(__m256d v, unsigned e) {
    __m256d r = _mm256_set1_pd(1.0);
    __m256d base = v;
    while (e) {
        if (e & 1u) r = _mm256_mul_pd(r, base);
        e >>= 1;
        if (e) base = _mm256_mul_pd(base, base);
    }
    return r;
}

inline __m256d pow4(__m256d v, const PowPlan& plan) {
    __m256d r;
    switch (plan.kind) {
    case PowPlan::Kind::IntExp:
        r = int_pow(v, plan.iexp);
        break;
    case PowPlan::Kind::HalfExp:
        r = _mm256_mul_pd(int_pow(v, plan.iexp), _mm256_sqrt_pd(v));
        break;
    case PowPlan::Kind::Libm:
    default: {
        alignas(32) double lanes[4];
        _mm256_store_pd(lanes, v);
        for (double& t : lanes) t = std::pow(t, std::fabs(plan.exponent));
        r = _mm256_load_pd(lanes);
        break;
    }
    }
    if (plan.reciprocal) r = _mm256_div_pd(_mm256_set1_pd(1.0), r);
    return r;
}

} // namespace

void iterate_map(std::span<double> g, double alpha) {
    const double p = alpha + 1.0;
    const double inv = 1.0 / p;
    const PowPlan plan = make_plan(p);
    const __m256d vinv = _mm256_set1_pd(inv);
    std::size_t i = 0;
    const std::size_t n4 = g.size() & ~std::size_t{3};
    for (; i < n4; i += 4) {
        __m256d v = _mm256_loadu_pd(g.data() + i);
        v = _mm256_fnmadd_pd(pow4(v, plan), vinv, v);
        _mm256_storeu_pd(g.data() + i, v);
    }
    for (; i < g.size(); ++i) g[i] -= std::pow(g[i], p) * inv;
}

void pow_array(std::span<const double> in, std::span<double> out, double exponent) {
    const PowPlan plan = make_plan(exponent);
    std::size_t i = 0;
    const std::size_t n4 = in.size() & ~std::size_t{3};
    for (; i < n4; i += 4)
        _mm256_storeu_pd(out.data() + i, pow4(_mm256_loadu_pd(in.data() + i), plan));
    for (; i < in.size(); ++i) out[i] = std::pow(in[i], exponent);
}

double trapezoid(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n < 2) return 0.0;
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 1;
    for (; i + 4 <= n; i += 4) {
        const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(x.data() + i),
                                         _mm256_loadu_pd(x.data() + i - 1));
        const __m256d sy = _mm256_add_pd(_mm256_loadu_pd(y.data() + i),
                                         _mm256_loadu_pd(y.data() + i - 1));
        acc = _mm256_fmadd_pd(dx, sy, acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double sum = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) sum += (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
    return 0.5 * sum;
}

double min_value(std::span<const double> v) {
    std::size_t i = 0;
    double m = v[0];
    if (v.size() >= 4) {
        __m256d acc = _mm256_loadu_pd(v.data());
        for (i = 4; i + 4 <= v.size(); i += 4)
            acc = _mm256_min_pd(acc, _mm256_loadu_pd(v.data() + i));
        alignas(32) double lanes[4];
        _mm256_store_pd(lanes, acc);
        m = lanes[0];
        for (int k = 1; k < 4; ++k)
            if (lanes[k] < m) m = lanes[k];
    }
    for (; i < v.size(); ++i)
        if (v[i] < m) m = v[i];
    return m;
}

} // namespace twostop::kernels::avx2

#endif // TWOSTOP_HAVE_AVX2
