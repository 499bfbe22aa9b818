#pragma once

#include <array>
#include <cstddef>

#include "adlab/complex_gamma.hpp"

namespace adlab {

// The remainder integral left after moving the Mellin-Barnes contour to
// Re s = -1:
//
//   I(r, y) = (1/2pi) int Gamma(-1/2+i(r+t))^2 Gamma(1-it) / Gamma(i(2r+t)) y^(-1+it) dt,
//
// i.e. (1/2pi i) times the contour integral over s = -1 + it.

inline constexpr double kRemainderMinR = 2.0;
inline constexpr double kRemainderMaxR = 100.0;

/// Step-halving record of one integral_I evaluation.
struct RemainderIntegral {
  Complex value;
  Complex previous;  // one halving before
  double step = 0.0;
  int halvings = 0;
};

/// I(r, y) for 2 <= r <= 100 and 1 <= y <= 1e6.
Complex integral_I(double r, double y);
RemainderIntegral integral_I_detailed(double r, double y);

/// (1/2pi) int |integrand of I| dt times y: the exact absolute-value bound on |I| y.
double integral_I_absolute(double r);

/// The seven pieces of the majorant
///   sqrt(|2r+t| sinh pi|2r+t|) / ((1+(r+t)^2) cosh pi(r+t)) * sqrt(|t| / sinh pi|t|)
/// over (1,inf), (-1,1), (-r+1,-1), (-r-1,-r+1), (-2r+1,-r-1), (-2r-1,-2r+1), (-inf,-2r-1).
/// Degenerate intervals (possible at r = 2) contribute zero.
struct MajorantBreakdown {
  std::array<double, 7> pieces{};
  double total = 0.0;

  double dominant() const { return pieces[1] + pieces[2] + pieces[3]; }
};

double majorant_integrand(double r, double t);

MajorantBreakdown majorant_decomposition(double r);

/// |r + t/2| - |r + t| - |t|/2, evaluated directly.
double exponent_profile(double r, double t);

// |I| y <= kMajorantConstant * total: 1/(1/4+u^2) <= 4/(1+u^2) and the
// pi from |Gamma(1/2+iu)|^2, over the 2pi of the measure.
inline constexpr double kMajorantConstant = 2.0;

}  // namespace adlab
