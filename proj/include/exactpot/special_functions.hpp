#pragma once

#include "exactpot/types.hpp"

namespace exactpot {

/// Principal branch of log Gamma(x): analytic on C minus (-inf, 0], with the
/// value on the negative real axis taken as the limit from above.
/// Throws PoleError at non-positive integers.
Complex log_gamma(Complex x);

/// Gamma(x) = exp(log_gamma(x)).
Complex gamma_function(Complex x);

/// 1/Gamma(x); exactly zero at the poles of Gamma.
Complex reciprocal_gamma(Complex x);

struct HypergeometricInput {
  Complex alpha;
  Complex beta;
  Complex gamma;
  Complex z;
};

/// How to treat arguments on the cut [1, inf).
enum class CutPolicy {
  reject,     // throw BranchCutError
  principal,  // continuous from the upper half plane
};

/// Gauss hypergeometric function 2F1(alpha, beta; gamma; z).
///
/// Route selection:
///  - z == 0 or a terminating series (alpha or beta a non-positive integer):
///    evaluated as a polynomial for any z.
///  - |z| <= 0.5: direct Gauss series.
///  - |z/(z-1)| <= 0.5: Pfaff transformation.
///  - |1-z| <= 0.5 and gamma-alpha-beta at least 0.05 from an integer:
///    the 1-z connection formula.
///  - otherwise: Taylor-series continuation of the hypergeometric ODE along
///    a ray from the origin (which never crosses the cut).
/// At z == 1 the Gauss sum is returned when Re(gamma-alpha-beta) > 0.
///
/// Throws PoleError when gamma is a non-positive integer and the series does
/// not terminate first, BranchCutError for z on [1, inf) under
/// CutPolicy::reject, ConvergenceError after 20000 series terms.
Complex gauss_2f1(const HypergeometricInput& in, CutPolicy cut = CutPolicy::reject);

/// d/dz 2F1 = (alpha beta / gamma) 2F1(alpha+1, beta+1; gamma+1; z).
Complex gauss_2f1_derivative(const HypergeometricInput& in, CutPolicy cut = CutPolicy::reject);

/// Individual evaluation routes, exposed so the routes can be checked against
/// each other on their overlaps.
namespace hyp2f1_route {

/// Direct Gauss series. Requires |z| < 1.
Complex series(const HypergeometricInput& in);

/// (1-z)^(-alpha) 2F1(alpha, gamma-beta; gamma; z/(z-1)), inner value by gauss_2f1.
Complex pfaff(const HypergeometricInput& in);

/// Connection formula around z = 1. Requires gamma-alpha-beta non-integer.
Complex connection(const HypergeometricInput& in);

/// ODE continuation from the series disc out to z along the ray through z.
Complex continuation(const HypergeometricInput& in);

}  // namespace hyp2f1_route

}  // namespace exactpot
