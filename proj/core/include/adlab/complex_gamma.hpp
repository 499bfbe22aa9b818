#pragma once

#include <complex>

namespace adlab {

using Complex = std::complex<double>;

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Domain shared by ln_gamma and digamma: Re z > kMinRealPart, |Im z| <= kMaxImagPart.
inline constexpr double kGammaMinRealPart = -20.0;
inline constexpr double kGammaMaxImagPart = 1.0e6;

/// Principal branch of log Gamma(z).
///
/// The argument is shifted upward by the recurrence Gamma(z+1) = z Gamma(z)
/// until the Stirling series (Bernoulli terms through B20) is accurate, and the
/// accumulated logarithms are subtracted afterwards. The imaginary part is
/// continuous along horizontal lines, so on Re z > 0 the result coincides with
/// the analytic continuation of log Gamma from the positive real axis.
///
/// Throws PoleError at non-positive integers and DomainError outside
/// Re z > -20, |Im z| <= 1e6.
Complex ln_gamma(Complex z);

/// psi(z) = Gamma'(z) / Gamma(z), same domain and strategy as ln_gamma.
Complex digamma(Complex z);

/// |Gamma(1/2 + i t)|^2 = pi / cosh(pi t), for |t| <= 200.
double gamma_abs_sq_critical(double t);

// Throws OverflowError if either component is not finite.
Complex require_finite(Complex v, const char* what);

}  // namespace adlab
