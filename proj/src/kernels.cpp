#include "twostop/kernels.hpp"

namespace twostop::kernels {
namespace {

struct Ops {
    void (*iterate_map)(std::span<double>, double);
    void (*pow_array)(std::span<const double>, std::span<double>, double);
    double (*trapezoid)(std::span<const double>, std::span<const double>);
    double (*min_value)(std::span<const double>);
};

constexpr Ops kScalar{scalar::iterate_map, scalar::pow_array, scalar::trapezoid,
                      scalar::min_value};

#if defined(TWOSTOP_HAVE_AVX2)
constexpr Ops kAvx2{avx2::iterate_map, avx2::pow_array, avx2::trapezoid,
                    avx2::min_value};
#endif

bool detect_avx2() {
#if defined(TWOSTOP_HAVE_AVX2) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

struct State {
    Backend backend;
    const Ops* ops;
    State() {
        if (detect_avx2()) {
#if defined(TWOSTOP_HAVE_AVX2)
            backend = Backend::Avx2;
            ops = &kAvx2;
            return;
#endif
        }
        backend = Backend::Scalar;
        ops = &kScalar;
    }
};

State& state() {
    static State s;
    return s;
}

} // namespace

Backend active() { return state().backend; }

bool set_backend(Backend b) {
    switch (b) {
    case Backend::Scalar:
        state().backend = Backend::Scalar;
        state().ops = &kScalar;
        return true;
    case Backend::Avx2:
#if defined(TWOSTOP_HAVE_AVX2)
        if (detect_avx2()) {
            state().backend = Backend::Avx2;
            state().ops = &kAvx2;
            return true;
        }
#endif
        return false;
    }
    return false;
}

const char* backend_name(Backend b) {
    return b == Backend::Avx2 ? "avx2" : "scalar";
}

bool avx2_available() { return detect_avx2(); }

void iterate_map(std::span<double> g, double alpha) { state().ops->iterate_map(g, alpha); }

void pow_array(std::span<const double> in, std::span<double> out, double exponent) {
    state().ops->pow_array(in, out, exponent);
}

double trapezoid(std::span<const double> x, std::span<const double> y) {
    return state().ops->trapezoid(x, y);
}

double min_value(std::span<const double> v) { return state().ops->min_value(v); }

} // namespace twostop::kernels
