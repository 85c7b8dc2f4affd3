#pragma once

#include <cstddef>
#include <span>

namespace twostop::kernels {

/// Data-parallel inner loops behind the DP grid sweep and the samplers.
/// Scalar reference implementations always exist; the AVX2 variants are
/// selected at runtime when the host supports them and are equivalence-tested
/// against the scalar path.

enum class Backend { Scalar, Avx2 };

Backend active();
/// Force a backend; returns false (and leaves the selection unchanged) when
/// the requested backend is not available on this host.
bool set_backend(Backend b);
const char* backend_name(Backend b);
bool avx2_available();

/// In-place map g <- g - g^(alpha+1)/(alpha+1) (one DP stage on the grid).
void iterate_map(std::span<double> g, double alpha);

/// out[i] = in[i]^exponent.
void pow_array(std::span<const double> in, std::span<double> out, double exponent);

/// Composite trapezoid sum over nodes (x[i], y[i]); x need not be uniform.
double trapezoid(std::span<const double> x, std::span<const double> y);

/// Minimum of a non-empty array.
double min_value(std::span<const double> v);

namespace scalar {
void iterate_map(std::span<double> g, double alpha);
void pow_array(std::span<const double> in, std::span<double> out, double exponent);
double trapezoid(std::span<const double> x, std::span<const double> y);
double min_value(std::span<const double> v);
} // namespace scalar

#if defined(TWOSTOP_HAVE_AVX2)
namespace avx2 {
void iterate_map(std::span<double> g, double alpha);
void pow_array(std::span<const double> in, std::span<double> out, double exponent);
double trapezoid(std::span<const double> x, std::span<const double> y);
double min_value(std::span<const double> v);
} // namespace avx2
#endif

} // namespace twostop::kernels
