#include "exactpot/transform_core.hpp"

#include <string>

namespace exactpot {

namespace {

// z^e with an exact result for small integer exponents.
Complex power(Complex base, Complex exponent) {
  if (exponent.imag() == 0.0) {
    const double e = exponent.real();
    if (e == 0.0) return 1.0;
    if (e == 1.0) return base;
    if (e == 2.0) return base * base;
  }
  return std::pow(base, exponent);
}

void require_order(int order) {
  if (order < 0 || order > 2) throw ValidationError("derivative order must be 0, 1 or 2");
}

}  // namespace

void require_regular_point(Complex z) {
  require_finite(z, "z");
  if (std::abs(z) < kSingularGuard || std::abs(1.0 - z) < kSingularGuard) {
    throw SingularPointError("z too close to a singular point {0, 1}");
  }
}

Complex hypergeometric_g(const CaseParams& params, Complex z) {
  require_regular_point(z);
  const Complex s = params.alpha + params.beta + 1.0;
  return (params.gamma - s * z) / (z * (1.0 - z));
}

Complex hypergeometric_h(const CaseParams& params, Complex z) {
  require_regular_point(z);
  return -params.alpha * params.beta / (z * (1.0 - z));
}

Complex hypergeometric_g_derivative(const CaseParams& params, Complex z) {
  require_regular_point(z);
  // g = N/D with N = gamma - s z, D = z - z^2:  g' = (N' D - N D') / D^2.
  const Complex s = params.alpha + params.beta + 1.0;
  const Complex numerator = params.gamma - s * z;
  const Complex denominator = z * (1.0 - z);
  const Complex denominator_prime = 1.0 - 2.0 * z;
  return (-s * denominator - numerator * denominator_prime) / (denominator * denominator);
}

TargetCoefficients target_coefficients(const CaseParams& params, Complex z) {
  return {hypergeometric_g(params, z), hypergeometric_h(params, z),
          hypergeometric_g_derivative(params, z)};
}

Complex rho_value(const TransformSpec& spec, Complex z, int order) {
  require_order(order);
  require_regular_point(z);
  const Complex rho = spec.c1 * power(z, spec.a) * power(1.0 - z, spec.b);
  if (order == 0) return rho;
  // rho_z / rho = L,  rho_zz / rho = L^2 + L_z.
  const Complex log_slope = spec.a / z - spec.b / (1.0 - z);
  if (order == 1) return rho * log_slope;
  const Complex log_slope_z = -spec.a / (z * z) - spec.b / ((1.0 - z) * (1.0 - z));
  return rho * (log_slope * log_slope + log_slope_z);
}

Complex f_value(const TransformSpec& spec, Complex z, int order) {
  require_order(order);
  require_regular_point(z);
  const Complex f = power(z, spec.p) * power(1.0 - z, spec.q);
  if (order == 0) return f;
  const Complex log_slope = spec.p / z - spec.q / (1.0 - z);
  if (order == 1) return f * log_slope;
  const Complex log_slope_z = -spec.p / (z * z) - spec.q / ((1.0 - z) * (1.0 - z));
  return f * (log_slope * log_slope + log_slope_z);
}

Complex schwarzian_via_rho(const TransformSpec& spec, Complex z) {
  const Complex rho = rho_value(spec, z, 0);
  const Complex rho_z = rho_value(spec, z, 1);
  const Complex rho_zz = rho_value(spec, z, 2);
  return rho * rho_zz - 0.5 * rho_z * rho_z;
}

Complex em_v_pointwise(const CaseParams& params, const TransformSpec& spec, Complex z) {
  const TargetCoefficients target = target_coefficients(params, z);
  const Complex rho = rho_value(spec, z, 0);
  const Complex bracket =
      target.h_value - 0.5 * target.g_derivative - 0.25 * target.g_value * target.g_value;
  return rho * rho * bracket + 0.5 * schwarzian_via_rho(spec, z);
}

double verify_f_rho_consistency(const CaseParams& params, const TransformSpec& spec, Complex z) {
  const Complex g = hypergeometric_g(params, z);
  const Complex f_ratio = f_value(spec, z, 1) / f_value(spec, z, 0);
  const Complex rho_ratio = rho_value(spec, z, 1) / rho_value(spec, z, 0);
  return std::abs(g - 2.0 * f_ratio - rho_ratio);
}

}  // namespace exactpot
