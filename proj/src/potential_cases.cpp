#include "exactpot/potential_cases.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

#include "exactpot/special_functions.hpp"

namespace exactpot {

namespace {

constexpr int kValidationSamples = 1000;
constexpr double kDomainMargin = 1e-6;
constexpr double kShapeGuard = 1e-12;
constexpr double kRecoveryMisfit = 1e-8;
constexpr double kMaxCondition = 1e8;
constexpr double kPreferredDeterminant = 0.1;

Complex guarded_inverse(Complex denominator, const char* what) {
  if (!is_finite(denominator) || std::abs(denominator) < kShapeGuard) {
    throw SingularPointError(std::string("shape function singular: ") + what);
  }
  return 1.0 / denominator;
}

// t^n with an exact sign for real negative t and integer n; principal branch otherwise.
Complex signed_power(Complex t, Complex exponent) {
  if (t.imag() == 0.0 && exponent.imag() == 0.0) {
    const double n = exponent.real();
    if (n == std::round(n) && std::abs(n) < 64.0) {
      return std::pow(t.real(), n);
    }
  }
  if (exponent == Complex(0.0)) return 1.0;
  return std::pow(t, exponent);
}

Complex plain_power(Complex base, Complex exponent) {
  if (exponent == Complex(0.0)) return 1.0;
  if (exponent == Complex(1.0)) return base;
  return std::pow(base, exponent);
}

double golden_minimum(const std::function<double(double)>& f, double lo, double hi, double* where) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < 80 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    }
  }
  if (f1 < f2) {
    *where = x1;
    return f1;
  }
  *where = x2;
  return f2;
}

double sample_point(const Domain& domain, double fraction) {
  double r = domain.r_min + fraction * (domain.r_max - domain.r_min);
  if (domain.puncture && !domain.contains(r)) {
    const double side = r >= *domain.puncture ? 1.0 : -1.0;
    r = *domain.puncture + side * 2.0 * domain.puncture_radius;
  }
  return r;
}

}  // namespace

ExponentPair case_exponents(CaseId id) {
  switch (id) {
    case CaseId::case1: return {0.0, 1.0};
    case CaseId::case2: return {0.5, 0.5};
    case CaseId::case3: return {0.5, 1.0};
    case CaseId::case4: return {1.0, 0.0};
    case CaseId::case5: return {1.0, 0.5};
    case CaseId::case6: return {1.0, 1.0};
  }
  throw ValidationError("unknown case");
}

CaseId case_from_exponents(double a, double b) {
  for (CaseId id : kAllCases) {
    const ExponentPair pair = case_exponents(id);
    if (pair.a == a && pair.b == b) return id;
  }
  if ((a == 0.0 && b == 0.0) || (a == 0.0 && b == 0.5) || (a == 0.5 && b == 0.0)) {
    throw ValidationError("exponent pair has no energy term and is not a solvable case");
  }
  throw ValidationError("exponent pair is not one of the six cases");
}

CaseId case_from_number(int number) {
  if (number < 1 || number > 6) throw ValidationError("case must be 1..6");
  return static_cast<CaseId>(number);
}

int case_number(CaseId id) { return static_cast<int>(id); }

ParameterMode classify_params(const CaseParams& params) {
  for (Complex x : {params.alpha, params.beta, params.gamma, params.c1, params.c2}) {
    require_finite(x, "case parameter");
  }
  if (params.c1 == Complex(0.0)) throw ValidationError("c1 must be non-zero");
  const bool rest_real = params.alpha.imag() == 0.0 && params.beta.imag() == 0.0 &&
                         params.gamma.imag() == 0.0 && params.c2.imag() == 0.0;
  if (!rest_real) throw ValidationError("alpha, beta, gamma and c2 must be real");
  if (params.c1.imag() == 0.0) return ParameterMode::real;
  if (params.c1.real() == 0.0) return ParameterMode::pt;
  throw ValidationError("c1 must be real or purely imaginary");
}

TransformSpec case_transform_spec(CaseId id, const CaseParams& params) {
  const ExponentPair pair = case_exponents(id);
  TransformSpec spec;
  spec.a = pair.a;
  spec.b = pair.b;
  spec.p = (params.gamma - pair.a) / 2.0;
  spec.q = (params.alpha + params.beta + 1.0 - params.gamma - pair.b) / 2.0;
  spec.c1 = params.c1;
  return spec;
}

Complex coordinate_map(CaseId id, const CaseParams& params, double r) {
  const Complex c1 = params.c1;
  const Complex c2 = params.c2;
  switch (id) {
    case CaseId::case1: return 1.0 + c2 * std::exp(-c1 * r);
    case CaseId::case2: {
      const Complex s = std::sin(0.5 * (c1 * r + c2));
      return 1.0 - s * s;
    }
    case CaseId::case3: {
      const Complex t = std::tanh(0.5 * (c1 * r - c2));
      return t * t;
    }
    case CaseId::case4: return c2 * std::exp(c1 * r);
    case CaseId::case5: {
      const Complex sech = 1.0 / std::cosh(0.5 * (c1 * r + c2));
      return sech * sech;
    }
    case CaseId::case6: return 1.0 / (1.0 + c2 * std::exp(-c1 * r));
  }
  throw ValidationError("unknown case");
}

Complex map_r_to_z(CaseId id, const CaseParams& params, double r) {
  const Complex z = coordinate_map(id, params, r);
  if (!is_finite(z) || std::abs(z) < kSingularGuard || std::abs(1.0 - z) < kSingularGuard) {
    throw DomainError("z(r) at r = " + std::to_string(r) + " is at a singular point of the map");
  }
  return z;
}

Complex map_derivative(CaseId id, const CaseParams& params, double r) {
  const Complex c1 = params.c1;
  const Complex c2 = params.c2;
  switch (id) {
    case CaseId::case1: return -c1 * c2 * std::exp(-c1 * r);
    case CaseId::case2: return -0.5 * c1 * std::sin(c1 * r + c2);
    case CaseId::case3: {
      const Complex x = 0.5 * (c1 * r - c2);
      const Complex sech = 1.0 / std::cosh(x);
      return c1 * std::tanh(x) * sech * sech;
    }
    case CaseId::case4: return c1 * c2 * std::exp(c1 * r);
    case CaseId::case5: {
      const Complex y = 0.5 * (c1 * r + c2);
      const Complex sech = 1.0 / std::cosh(y);
      return -c1 * sech * sech * std::tanh(y);
    }
    case CaseId::case6: {
      const Complex decay = c2 * std::exp(-c1 * r);
      const Complex denominator = 1.0 + decay;
      return c1 * decay / (denominator * denominator);
    }
  }
  throw ValidationError("unknown case");
}

double map_orientation(CaseId id, const CaseParams& params, double r) {
  const Complex z = map_r_to_z(id, params, r);
  const Complex ratio = map_derivative(id, params, r) / rho_value(case_transform_spec(id, params), z, 0);
  return ratio.real() >= 0.0 ? 1.0 : -1.0;
}

double z_to_r(CaseId id, const CaseParams& params, double z) {
  if (classify_params(params) != ParameterMode::real) {
    throw ValidationError("z_to_r is defined for real parameters only");
  }
  if (!(z > 0.0 && z < 1.0)) throw DomainError("z_to_r: z must lie in (0, 1)");
  const double c1 = params.c1.real();
  const double c2 = params.c2.real();
  switch (id) {
    case CaseId::case1:
      if (c2 >= 0.0) throw DomainError("case 1 maps into (0,1) only for c2 < 0");
      return -std::log((1.0 - z) / -c2) / c1;
    case CaseId::case2: return (2.0 * std::acos(std::sqrt(z)) - c2) / c1;
    case CaseId::case3: return (2.0 * std::atanh(std::sqrt(z)) + c2) / c1;
    case CaseId::case4:
      if (c2 <= 0.0) throw DomainError("case 4 maps into (0,1) only for c2 > 0");
      return std::log(z / c2) / c1;
    case CaseId::case5: return (2.0 * std::acosh(1.0 / std::sqrt(z)) - c2) / c1;
    case CaseId::case6:
      if (c2 <= 0.0) throw DomainError("case 6 maps into (0,1) only for c2 > 0");
      return std::log(c2 * z / (1.0 - z)) / c1;
  }
  throw ValidationError("unknown case");
}

bool Domain::contains(double r) const {
  if (!(r >= r_min && r <= r_max)) return false;
  if (puncture && std::abs(r - *puncture) < puncture_radius) return false;
  return true;
}

Domain preimage_domain(CaseId id, const CaseParams& params, double z_lo, double z_hi) {
  const double r1 = z_to_r(id, params, z_lo);
  const double r2 = z_to_r(id, params, z_hi);
  Domain domain;
  domain.r_min = std::min(r1, r2);
  domain.r_max = std::max(r1, r2);
  return domain;
}

double singular_distance(CaseId id, const CaseParams& params, double r) {
  const Complex z = coordinate_map(id, params, r);
  if (!is_finite(z)) return 0.0;
  const double magnitude = std::abs(z);
  double distance = std::min({magnitude, std::abs(1.0 - z), magnitude > 0.0 ? 1.0 / magnitude : 0.0});
  if (classify_params(params) == ParameterMode::pt && z.real() >= 1.0) {
    distance = std::min(distance, std::abs(z.imag()));
  }
  return distance;
}

std::vector<double> locate_singular_points(CaseId id, const CaseParams& params, double lo, double hi,
                                           int samples, double threshold) {
  std::vector<double> found;
  if (samples < 3 || !(hi > lo)) return found;
  const double step = (hi - lo) / (samples - 1);
  std::vector<double> distance(samples);
  for (int i = 0; i < samples; ++i) distance[i] = singular_distance(id, params, lo + i * step);
  const auto f = [&](double r) { return singular_distance(id, params, r); };
  for (int i = 1; i + 1 < samples; ++i) {
    if (distance[i] > distance[i - 1] || distance[i] > distance[i + 1]) continue;
    double where = 0.0;
    const double minimum = golden_minimum(f, lo + (i - 1) * step, lo + (i + 1) * step, &where);
    if (minimum < threshold && (found.empty() || where - found.back() > 2.0 * step)) {
      found.push_back(where);
    }
  }
  return found;
}

Coefficients closed_form_coefficients(CaseId id, const CaseParams& params, TableVariant variant) {
  const Complex al = params.alpha;
  const Complex be = params.beta;
  const Complex ga = params.gamma;
  const Complex c1sq = params.c1 * params.c1;
  const Complex c2 = params.c2;
  const bool printed = variant == TableVariant::printed;
  switch (id) {
    case CaseId::case1:
      return {c1sq * c2 * c2 / 4.0 * ga * (ga - 2.0),
              c1sq * c2 / 2.0 * (al * ga + be * ga + ga - ga * ga - 2.0 * al * be),
              -c1sq / 4.0 * (al + be - ga) * (al + be - ga)};
    case CaseId::case2: {
      const Complex s = al + be;
      return {c1sq / 4.0 * (2.0 * s * s + 1.0) - c1sq * (s - ga + 1.0) * ga,
              c1sq / 2.0 * (s - 1.0) * (s + 1.0 - 2.0 * ga),
              c1sq / 4.0 * (al - be) * (al - be)};
    }
    case CaseId::case3:
      return {-c1sq / 16.0 * (4.0 * (al - be) * (al - be) - 1.0),
              c1sq / 16.0 * (4.0 * ga * ga - 8.0 * ga + 3.0),
              -c1sq / 4.0 * (al + be - ga) * (al + be - ga)};
    case CaseId::case4: {
      const Complex d = al + be - ga;
      const Complex a_coeff = printed ? -c1sq / 4.0 * (d * d + 1.0) : c1sq / 4.0 * (d * d - 1.0);
      return {a_coeff, c1sq / 2.0 * (al * al + be * be + ga * (1.0 - al - be) - 1.0),
              -c1sq / 4.0 * (al - be) * (al - be)};
    }
    case CaseId::case5: {
      const Complex sum_sq = al * al + be * be;
      const Complex a_coeff =
          printed ? c1sq / 4.0 * (4.0 * sum_sq - 4.0 * (al + be) + 2.0 * ga - 1.0)
                  : c1sq / 4.0 * (4.0 * sum_sq - 4.0 * ga * (al + be) + 2.0 * ga * ga - 1.0);
      return {a_coeff, c1sq / 2.0 * (2.0 * al - ga) * (2.0 * be - ga), -c1sq / 4.0 * (ga - 1.0) * (ga - 1.0)};
    }
    case CaseId::case6:
      return {c1sq / 4.0 * ((al - be) * (al - be) - 1.0),
              c1sq / 2.0 * (2.0 * al * be + ga - al * ga - be * ga),
              -c1sq / 4.0 * (ga - 1.0) * (ga - 1.0)};
  }
  throw ValidationError("unknown case");
}

ShapeValues shape_functions(CaseId id, const CaseParams& params, double r) {
  const Complex c1 = params.c1;
  const Complex c2 = params.c2;
  switch (id) {
    case CaseId::case1: {
      const Complex inv = guarded_inverse(c2 + std::exp(c1 * r), "c2 + exp(c1 r) = 0");
      return {inv * inv, inv};
    }
    case CaseId::case2: {
      const Complex theta = c1 * r + c2;
      const Complex inv = guarded_inverse(std::sin(theta), "sin(c1 r + c2) = 0");
      return {inv * inv, std::cos(theta) * inv * inv};
    }
    case CaseId::case3: {
      const Complex x = 0.5 * (c1 * r - c2);
      const Complex sech = guarded_inverse(std::cosh(x), "cosh = 0");
      const Complex csch = guarded_inverse(std::sinh(x), "sinh = 0");
      return {sech * sech, csch * csch};
    }
    case CaseId::case4: {
      const Complex inv = guarded_inverse(c2 * std::exp(c1 * r) - 1.0, "c2 exp(c1 r) = 1");
      return {inv * inv, inv};
    }
    case CaseId::case5: {
      const Complex x = c1 * r + c2;
      const Complex csch = guarded_inverse(std::sinh(x), "sinh(c1 r + c2) = 0");
      return {csch * csch, std::cosh(x) * csch * csch};
    }
    case CaseId::case6: {
      const Complex w = guarded_inverse(1.0 + c2 * std::exp(-c1 * r), "exp(c1 r) + c2 = 0");
      return {w * w, w};
    }
  }
  throw ValidationError("unknown case");
}

PotentialModel::PotentialModel(CaseId id, const CaseParams& params, Domain domain, CoefficientSource source)
    : case_(id),
      params_(params),
      spec_(case_transform_spec(id, params)),
      domain_(std::move(domain)),
      mode_(classify_params(params)) {
  validate_domain();
  if (source == CoefficientSource::table) {
    coefficients_ = closed_form_coefficients(id, params);
  } else {
    const RecoveryReport report =
        recover_with_shapes(id, params, domain_, [&](double r) { return shape_functions(id, params, r); });
    if (report.validation_residual > kRecoveryMisfit) {
      throw ValidationError("oracle coefficients do not reproduce E - V on the domain");
    }
    coefficients_ = report.coefficients;
  }
}

PotentialModel::PotentialModel(CaseId id, const CaseParams& params, Domain domain,
                               const Coefficients& coefficients)
    : case_(id),
      params_(params),
      spec_(case_transform_spec(id, params)),
      domain_(std::move(domain)),
      mode_(classify_params(params)),
      coefficients_(coefficients) {
  validate_domain();
}

void PotentialModel::validate_domain() const {
  if (!std::isfinite(domain_.r_min) || !std::isfinite(domain_.r_max) || !(domain_.r_max > domain_.r_min)) {
    throw DomainError("domain must be a finite interval with r_max > r_min");
  }
  const double step = (domain_.r_max - domain_.r_min) / (kValidationSamples - 1);
  std::vector<double> distance(kValidationSamples, 0.0);
  std::vector<bool> kept(kValidationSamples, false);
  for (int i = 0; i < kValidationSamples; ++i) {
    const double r = domain_.r_min + i * step;
    if (!domain_.contains(r)) continue;
    kept[i] = true;
    const Complex z = coordinate_map(case_, params_, r);
    const std::string where = " at r = " + std::to_string(r);
    if (!is_finite(z)) throw DomainError("z(r) is not finite" + where);
    if (mode_ == ParameterMode::real) {
      if (!(z.real() > 0.0 && z.real() < 1.0)) throw DomainError("z(r) leaves (0, 1)" + where);
    } else {
      const bool near_cut = z.real() >= 1.0 && std::abs(z.imag()) < kDomainMargin;
      if (std::abs(z) < kDomainMargin || std::abs(1.0 - z) < kDomainMargin || near_cut) {
        throw DomainError("z(r) is within 1e-6 of {0, 1} or the cut" + where);
      }
    }
    try {
      shape_functions(case_, params_, r);
    } catch (const SingularPointError&) {
      throw DomainError("shape functions are singular" + where);
    }
    distance[i] = singular_distance(case_, params_, r);
  }
  const auto f = [&](double r) { return singular_distance(case_, params_, r); };
  for (int i = 1; i + 1 < kValidationSamples; ++i) {
    if (!kept[i - 1] || !kept[i] || !kept[i + 1]) continue;
    if (distance[i] > distance[i - 1] || distance[i] > distance[i + 1]) continue;
    double where = 0.0;
    const double lo = domain_.r_min + (i - 1) * step;
    if (golden_minimum(f, lo, lo + 2.0 * step, &where) < kDomainMargin) {
      throw DomainError("singular point of the map inside the domain near r = " + std::to_string(where));
    }
  }
}

PotentialSample potential_and_energy(const PotentialModel& model, double r) {
  const ShapeValues shapes = shape_functions(model.case_id(), model.params(), r);
  const Coefficients& k = model.coefficients();
  return {k.A * shapes.s1 + k.B * shapes.s2, k.C};
}

WavefunctionSample exact_wavefunction(const PotentialModel& model, double r) {
  if (!model.domain().contains(r)) throw DomainError("r = " + std::to_string(r) + " is outside the model domain");
  const CaseParams& params = model.params();
  const TransformSpec& spec = model.spec();
  const Complex z = map_r_to_z(model.case_id(), params, r);

  Complex f;
  if (model.case_id() == CaseId::case3) {
    const Complex t = std::tanh(0.5 * (params.c1 * r - params.c2));
    f = signed_power(t, 2.0 * spec.p) * plain_power(1.0 - z, spec.q);
  } else {
    f = f_value(spec, z, 0);
  }
  const Complex log_slope = spec.p / z - spec.q / (1.0 - z);
  const Complex log_slope_z = -spec.p / (z * z) - spec.q / ((1.0 - z) * (1.0 - z));
  const Complex f_z = f * log_slope;
  const Complex f_zz = f * (log_slope * log_slope + log_slope_z);

  const HypergeometricInput input{params.alpha, params.beta, params.gamma, z};
  const Complex u = gauss_2f1(input);
  const Complex u_z = gauss_2f1_derivative(input);
  const TargetCoefficients target = target_coefficients(params, z);
  const Complex u_zz = -target.g_value * u_z - target.h_value * u;

  const Complex rho = rho_value(spec, z, 0);
  const Complex rho_z = rho_value(spec, z, 1);

  const Complex psi = f * u;
  const Complex psi_z = f_z * u + f * u_z;
  const Complex psi_zz = f_zz * u + 2.0 * f_z * u_z + f * u_zz;
  return {r, psi, rho * rho * psi_zz + rho * rho_z * psi_z};
}

double analytic_residual(const PotentialModel& model, double r, Complex energy_offset) {
  const WavefunctionSample sample = exact_wavefunction(model, r);
  const Complex z = map_r_to_z(model.case_id(), model.params(), r);
  const Complex e_minus_v = em_v_pointwise(model.params(), model.spec(), z) + energy_offset;
  const double scale = std::max(1.0, std::abs(sample.psi) * std::abs(e_minus_v));
  return std::abs(sample.psi_rr + e_minus_v * sample.psi) / scale;
}

RecoveryReport recover_with_shapes(CaseId id, const CaseParams& params, const Domain& domain,
                                   const ShapeFunction& shapes) {
  static constexpr std::array<std::array<double, 3>, 5> kLadder = {{{0.12, 0.5, 0.88},
                                                                    {0.08, 0.42, 0.9},
                                                                    {0.2, 0.57, 0.83},
                                                                    {0.03, 0.3, 0.72},
                                                                    {0.27, 0.62, 0.97}}};
  const TransformSpec spec = case_transform_spec(id, params);
  const auto oracle = [&](double r) { return em_v_pointwise(params, spec, map_r_to_z(id, params, r)); };

  struct Candidate {
    Eigen::Matrix3cd matrix;
    Eigen::Vector3cd rhs;
    Eigen::Vector3d column_scale;
    std::array<double, 3> points;
    double determinant;
    double condition;
  };
  std::optional<Candidate> chosen;
  std::optional<Candidate> fallback;
  for (const auto& fractions : kLadder) {
    Candidate c;
    for (int i = 0; i < 3; ++i) {
      const double r = sample_point(domain, fractions[i]);
      const ShapeValues s = shapes(r);
      c.points[i] = r;
      c.matrix.row(i) << -s.s1, -s.s2, 1.0;
      c.rhs(i) = oracle(r);
    }
    for (int j = 0; j < 3; ++j) c.column_scale(j) = c.matrix.col(j).cwiseAbs().maxCoeff();
    if ((c.column_scale.array() == 0.0).any()) continue;
    const Eigen::Matrix3cd scaled = c.matrix * c.column_scale.cwiseInverse().asDiagonal();
    Eigen::Matrix3cd unit_rows = scaled;
    for (int i = 0; i < 3; ++i) unit_rows.row(i).normalize();
    c.determinant = std::abs(unit_rows.determinant());
    const Eigen::JacobiSVD<Eigen::Matrix3cd> svd(scaled);
    const Eigen::Vector3d sv = svd.singularValues();
    c.condition = sv(2) > 0.0 ? sv(0) / sv(2) : std::numeric_limits<double>::infinity();
    if (!(c.condition < kMaxCondition)) continue;
    if (c.determinant >= kPreferredDeterminant) {
      chosen = c;
      break;
    }
    if (!fallback || c.determinant > fallback->determinant) fallback = c;
  }
  if (!chosen) chosen = fallback;
  if (!chosen) throw IllConditionedError("coefficient recovery: every sample set is ill-conditioned");

  const Eigen::Matrix3cd scaled = chosen->matrix * chosen->column_scale.cwiseInverse().asDiagonal();
  const Eigen::Vector3cd y = scaled.colPivHouseholderQr().solve(chosen->rhs);
  const Eigen::Vector3cd x = y.cwiseQuotient(chosen->column_scale.cast<Complex>());

  RecoveryReport report;
  report.coefficients = {x(0), x(1), x(2)};
  report.sample_points = chosen->points;
  report.normalized_determinant = chosen->determinant;
  report.condition_number = chosen->condition;
  for (int k = 0; k < 10; ++k) {
    const double r = sample_point(domain, (k + 0.5) / 10.0);
    const ShapeValues s = shapes(r);
    const Complex a_term = x(0) * s.s1;
    const Complex b_term = x(1) * s.s2;
    const Complex target = oracle(r);
    const double scale = std::max({std::abs(target), std::abs(a_term), std::abs(b_term), std::abs(x(2))});
    const double misfit = std::abs(x(2) - a_term - b_term - target) / std::max(scale, 1e-300);
    report.validation_residual = std::max(report.validation_residual, misfit);
  }
  return report;
}

Coefficients recover_coefficients(CaseId id, const CaseParams& params) {
  if (classify_params(params) != ParameterMode::real) {
    throw ValidationError("recover_coefficients(case, params) needs real parameters; pass a model");
  }
  const PotentialModel model(id, params, preimage_domain(id, params));
  return recover_coefficients(model);
}

Coefficients recover_coefficients(const PotentialModel& model) {
  const CaseId id = model.case_id();
  const CaseParams& params = model.params();
  const RecoveryReport report =
      recover_with_shapes(id, params, model.domain(), [&](double r) { return shape_functions(id, params, r); });
  if (report.validation_residual > kRecoveryMisfit) {
    throw ValidationError("recovered coefficients fail validation (misfit " +
                          std::to_string(report.validation_residual) + ")");
  }
  return report.coefficients;
}

double coefficient_distance(const Coefficients& x, const Coefficients& y) {
  const double scale = std::max({std::abs(y.A), std::abs(y.B), std::abs(y.C)});
  const double diff = std::max({std::abs(x.A - y.A), std::abs(x.B - y.B), std::abs(x.C - y.C)});
  if (scale == 0.0) return diff;
  return diff / scale;
}

}  // namespace exactpot
