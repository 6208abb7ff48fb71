#pragma once

#include <utility>
#include <vector>

#include "exactpot/potential_cases.hpp"

namespace exactpot {

/// A potential with c1 purely imaginary and c2 real, certified PT-symmetric
/// about `symmetry_center`: V(2 x0 - r) = conj(V(r)).
class PtModel {
 public:
  /// Throws ValidationError unless the base model is in PT mode.
  PtModel(PotentialModel base, double symmetry_center = 0.0);

  const PotentialModel& base() const { return base_; }
  double symmetry_center() const { return center_; }

 private:
  PotentialModel base_;
  double center_;
};

/// Case 2 with c1 = i, c2 = pi/2 on [-5, 5]:
///   V = A sech^2 r - i B sech r tanh r,  E = C
///   A = -(2 (alpha+beta)^2 + 1)/4 + (alpha + beta - gamma + 1) gamma
///   B = -(alpha + beta - 1)(alpha + beta + 1 - 2 gamma)/2
///   C = -(alpha - beta)^2 / 4
PtModel case2_pt_model(double alpha, double beta, double gamma);

/// |V(2 x0 - r) - conj(V(r))|; DomainError when r or its mirror is outside.
double pt_defect(const PtModel& model, double r);

/// pt_defect / max(1, |V(r)|). Near a punctured singular centre |V| grows
/// like 1/t^2 and the absolute defect is dominated by rounding.
double scaled_pt_defect(const PtModel& model, double r);

/// Thrown when no symmetry centre in [-pi, pi] brings the scaled defect
/// under tolerance. Carries the defect profile at the best centre found.
class PtSymmetryError : public Error {
 public:
  PtSymmetryError(const std::string& what, double best_center, double best_defect,
                  std::vector<std::pair<double, double>> profile)
      : Error(what), best_center_(best_center), best_defect_(best_defect), profile_(std::move(profile)) {}

  double best_center() const { return best_center_; }
  double best_defect() const { return best_defect_; }
  const std::vector<std::pair<double, double>>& profile() const { return profile_; }

 private:
  double best_center_;
  double best_defect_;
  std::vector<std::pair<double, double>> profile_;
};

inline constexpr double kPtTolerance = 1e-12;

/// Points x0 +- t_k, t_k = w (k+1)/100, k = 0..99.
std::vector<double> symmetric_grid(double center, double half_width);

/// max scaled_pt_defect over the symmetric grid.
double max_pt_defect(const PtModel& model, int points_per_side = 100);

/// The case model with c1 = i * c1_magnitude. The centre is searched on a
/// coarse grid over [-pi, pi] and refined by golden section; the window is
/// min(5, 0.9 * distance to the nearest singular point other than the
/// centre), and a singular centre is punctured. Coefficients come from the
/// oracle-consistent table. Certification uses the scaled defect.
PtModel pt_generalize(CaseId id, double alpha, double beta, double gamma, double c1_magnitude, double c2);

}  // namespace exactpot
