#pragma once

#include <array>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "exactpot/transform_core.hpp"

namespace exactpot {

/// The six admitted exponent pairs (a, b) of rho = c1 z^a (1-z)^b.
enum class CaseId { case1 = 1, case2, case3, case4, case5, case6 };

inline constexpr std::array<CaseId, 6> kAllCases = {CaseId::case1, CaseId::case2, CaseId::case3,
                                                    CaseId::case4, CaseId::case5, CaseId::case6};

struct ExponentPair {
  double a;
  double b;
};

ExponentPair case_exponents(CaseId id);

/// Throws ValidationError for the excluded pairs (0,0), (0,1/2), (1/2,0) and
/// anything else outside the six cases.
CaseId case_from_exponents(double a, double b);

/// 1..6 -> CaseId; throws ValidationError otherwise.
CaseId case_from_number(int number);
int case_number(CaseId id);

/// real: all five parameters real.  pt: c1 purely imaginary, the rest real.
enum class ParameterMode { real, pt };

/// Throws ValidationError for c1 == 0, non-finite values or mixed complex input.
ParameterMode classify_params(const CaseParams& params);

/// p = (gamma - a)/2, q = (alpha + beta + 1 - gamma - b)/2.
TransformSpec case_transform_spec(CaseId id, const CaseParams& params);

/// z(r) as printed for each case, with no guard.
Complex coordinate_map(CaseId id, const CaseParams& params, double r);

/// z(r); throws DomainError when z is within 1e-9 of 0 or 1.
Complex map_r_to_z(CaseId id, const CaseParams& params, double r);

/// Closed-form dz/dr of the printed map.
Complex map_derivative(CaseId id, const CaseParams& params, double r);

/// The sign s with dz/dr = s * rho(z(r)). Every quantity built from rho is
/// even in rho, so the sign only matters when comparing dz/dr with rho.
double map_orientation(CaseId id, const CaseParams& params, double r);

/// Real mode: the r at which z(r) = z on the branch used by preimage_domain.
double z_to_r(CaseId id, const CaseParams& params, double z);

struct Domain {
  double r_min = 0.0;
  double r_max = 0.0;
  std::optional<double> puncture;  // excluded centre, e.g. a singular point
  double puncture_radius = 0.0;

  bool contains(double r) const;
};

/// Real mode: the r-interval on which z(r) runs over [z_lo, z_hi].
Domain preimage_domain(CaseId id, const CaseParams& params, double z_lo = 0.05, double z_hi = 0.95);

/// min(|z|, |1-z|, 1/|z|), plus the distance to the cut [1, inf) in PT mode.
double singular_distance(CaseId id, const CaseParams& params, double r);

/// Points in [lo, hi] where singular_distance has a local minimum below
/// `threshold` (sampled, then refined by golden section).
std::vector<double> locate_singular_points(CaseId id, const CaseParams& params, double lo, double hi,
                                           int samples = 2000, double threshold = 1e-6);

struct Coefficients {
  Complex A;
  Complex B;
  Complex C;
};

enum class TableVariant {
  printed,    // verbatim tables
  corrected,  // tables with the oracle-confirmed fixes for cases 4 and 5
};

Coefficients closed_form_coefficients(CaseId id, const CaseParams& params,
                                      TableVariant variant = TableVariant::printed);

struct ShapeValues {
  Complex s1;
  Complex s2;
};

/// (s1, s2) with E - V = C - A s1 - B s2. Case 6 uses s1 = z^2, s2 = z.
ShapeValues shape_functions(CaseId id, const CaseParams& params, double r);

enum class CoefficientSource { table, oracle };

/// A concrete potential: case, parameters, (A, B, C) and E = C.
///
/// The domain gates wavefunction evaluation. Construction checks 1000
/// samples (z strictly inside (0,1) in real mode; off 0, 1 and the cut in PT
/// mode) and rejects singular points closer than 1e-6 inside the interval.
class PotentialModel {
 public:
  PotentialModel(CaseId id, const CaseParams& params, Domain domain,
                 CoefficientSource source = CoefficientSource::table);
  PotentialModel(CaseId id, const CaseParams& params, Domain domain, const Coefficients& coefficients);

  CaseId case_id() const { return case_; }
  const CaseParams& params() const { return params_; }
  const TransformSpec& spec() const { return spec_; }
  const Coefficients& coefficients() const { return coefficients_; }
  Complex energy() const { return coefficients_.C; }
  const Domain& domain() const { return domain_; }
  ParameterMode mode() const { return mode_; }

 private:
  void validate_domain() const;

  CaseId case_;
  CaseParams params_;
  TransformSpec spec_;
  Domain domain_;
  ParameterMode mode_;
  Coefficients coefficients_;
};

struct PotentialSample {
  Complex V;
  Complex E;
};

/// V(r) = A s1 + B s2 and E = C. Defined wherever the shapes are finite.
PotentialSample potential_and_energy(const PotentialModel& model, double r);

struct WavefunctionSample {
  double r;
  Complex psi;
  Complex psi_rr;
};

/// psi = z^p (1-z)^q 2F1(alpha, beta; gamma; z(r)); psi_rr by the chain rule
/// with u_zz eliminated through the hypergeometric equation. Case 3 takes
/// z^p as tanh(x)^(2p), the odd continuation through the origin.
WavefunctionSample exact_wavefunction(const PotentialModel& model, double r);

/// |psi_rr + (E-V) psi| / max(1, |psi| |E-V|) with E - V from em_v_pointwise
/// (shifted by `energy_offset`).
double analytic_residual(const PotentialModel& model, double r, Complex energy_offset = 0.0);

struct RecoveryReport {
  Coefficients coefficients;
  std::array<double, 3> sample_points{};
  double normalized_determinant = 0.0;
  double condition_number = 0.0;
  double validation_residual = 0.0;  // max relative misfit at 10 extra points
};

using ShapeFunction = std::function<ShapeValues(double)>;

/// Recovers (A, B, C) by solving the 3x3 system
/// C - A s1(r_i) - B s2(r_i) = em_v_pointwise(z(r_i)) and report the misfit
/// at 10 further points. Throws IllConditionedError if all five point sets
/// of the retry ladder have condition number >= 1e8.
RecoveryReport recover_with_shapes(CaseId id, const CaseParams& params, const Domain& domain,
                                   const ShapeFunction& shapes);

/// Recovery with the case's own shapes; throws ValidationError if the misfit
/// exceeds 1e-8. Real mode only (domain from preimage_domain).
Coefficients recover_coefficients(CaseId id, const CaseParams& params);
Coefficients recover_coefficients(const PotentialModel& model);

/// Norm-wise relative distance max_k |x_k - y_k| / max_k |y_k| over (A, B, C).
double coefficient_distance(const Coefficients& x, const Coefficients& y);

}  // namespace exactpot
