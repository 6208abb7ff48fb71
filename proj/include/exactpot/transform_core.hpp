#pragma once

#include "exactpot/types.hpp"

namespace exactpot {

/// Parameters of the hypergeometric equation plus the two integration
/// constants of the coordinate map.
struct CaseParams {
  Complex alpha;
  Complex beta;
  Complex gamma;
  Complex c1;
  Complex c2;
};

/// psi = f(z) u(z) with f = z^p (1-z)^q, and dz/dr = rho = c1 z^a (1-z)^b.
struct TransformSpec {
  Complex p;
  Complex q;
  double a = 0.0;
  double b = 0.0;
  Complex c1;
};

struct TargetCoefficients {
  Complex g_value;
  Complex h_value;
  Complex g_derivative;
};

/// |z| and |1-z| below this are rejected by every z-space evaluation.
inline constexpr double kSingularGuard = 1e-9;

/// Throws SingularPointError when z is within kSingularGuard of 0 or 1.
void require_regular_point(Complex z);

/// g(z) = (gamma - (alpha+beta+1) z) / (z (1-z)).
Complex hypergeometric_g(const CaseParams& params, Complex z);

/// h(z) = -alpha beta / (z (1-z)).
Complex hypergeometric_h(const CaseParams& params, Complex z);

/// dg/dz in closed form.
Complex hypergeometric_g_derivative(const CaseParams& params, Complex z);

TargetCoefficients target_coefficients(const CaseParams& params, Complex z);

/// rho = c1 z^a (1-z)^b (order 0) and its first and second z-derivatives
/// (orders 1, 2). Principal branch for non-integer exponents.
Complex rho_value(const TransformSpec& spec, Complex z, int order);

/// f = z^p (1-z)^q (order 0) and its first and second z-derivatives.
Complex f_value(const TransformSpec& spec, Complex z, int order);

/// {z, r} = rho rho_zz - rho_z^2 / 2.
Complex schwarzian_via_rho(const TransformSpec& spec, Complex z);

/// E - V = rho^2 (h - g_z/2 - g^2/4) + {z, r}/2 at the point z, built only
/// from g, h, g_z, rho and the Schwarzian. This is the reference value every
/// coefficient table is checked against.
Complex em_v_pointwise(const CaseParams& params, const TransformSpec& spec, Complex z);

/// |g - 2 f_z/f - rho_z/rho| at z; vanishes when (p, q, a, b) solve the
/// matching condition for g.
double verify_f_rho_consistency(const CaseParams& params, const TransformSpec& spec, Complex z);

}  // namespace exactpot
