#include "exactpot/pt_symmetric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>

namespace exactpot {

namespace {

constexpr int kCoarseCenters = 81;
constexpr double kSearchHalfRange = std::numbers::pi;
constexpr double kMaxHalfWidth = 5.0;
constexpr double kWindowFraction = 0.9;
constexpr double kCenterMatch = 1e-6;
constexpr double kInfinity = std::numeric_limits<double>::infinity();
// In units of 1/|c1|. Smaller windows say nothing about symmetry; they only
// arise right next to an inadmissible centre.
constexpr double kMinHalfWidth = 1e-2;
constexpr std::size_t kRefinedMinima = 5;
constexpr double kCenterTie = 1e-9;

Complex potential_at(CaseId id, const CaseParams& params, const Coefficients& k, double r) {
  const ShapeValues s = shape_functions(id, params, r);
  return k.A * s.s1 + k.B * s.s2;
}

bool is_z_singular(CaseId id, const CaseParams& params, double r) {
  const Complex z = coordinate_map(id, params, r);
  if (!is_finite(z)) return true;
  const double m = std::abs(z);
  return m < kCenterMatch || std::abs(1.0 - z) < kCenterMatch || (m > 0.0 && 1.0 / m < kCenterMatch);
}

struct Window {
  double half_width = 0.0;
  bool punctured = false;
};

// Window about x0 bounded by the singular points other than x0 itself.
// Empty when x0 sits on the cut without being a singular point of z.
std::optional<Window> window_about(CaseId id, const CaseParams& params, const std::vector<double>& singular,
                                   double x0) {
  const double min_half_width = kMinHalfWidth / std::abs(params.c1);
  Window w;
  double nearest = kInfinity;
  for (double s : singular) {
    if (std::abs(s - x0) < kCenterMatch) {
      if (!is_z_singular(id, params, s)) return std::nullopt;
      w.punctured = true;
      continue;
    }
    nearest = std::min(nearest, std::abs(s - x0));
  }
  w.half_width = std::min(kMaxHalfWidth, kWindowFraction * nearest);
  if (w.half_width < min_half_width) return std::nullopt;
  return w;
}

double defect_about(CaseId id, const CaseParams& params, const Coefficients& k, double x0, double w) {
  double worst = 0.0;
  try {
    for (double r : symmetric_grid(x0, w)) {
      const Complex v = potential_at(id, params, k, r);
      const Complex mirrored = potential_at(id, params, k, 2.0 * x0 - r);
      const double d = std::abs(mirrored - std::conj(v)) / std::max(1.0, std::abs(v));
      if (!std::isfinite(d)) return kInfinity;
      worst = std::max(worst, d);
    }
  } catch (const SingularPointError&) {
    return kInfinity;
  }
  return worst;
}

// Golden-section minimum of f on [lo, hi] as (x, f(x)).
std::pair<double, double> golden_refine(const std::function<double(double)>& f, double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
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
  return f1 < f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

}  // namespace

PtModel::PtModel(PotentialModel base, double symmetry_center) : base_(std::move(base)), center_(symmetry_center) {
  if (base_.mode() != ParameterMode::pt) {
    throw ValidationError("PT model needs c1 purely imaginary and alpha, beta, gamma, c2 real");
  }
  if (!std::isfinite(center_)) throw ValidationError("symmetry centre must be finite");
}

PtModel case2_pt_model(double alpha, double beta, double gamma) {
  const CaseParams params{alpha, beta, gamma, Complex(0.0, 1.0), std::numbers::pi / 2.0};
  const double s = alpha + beta;
  const Coefficients k{-0.25 * (2.0 * s * s + 1.0) + (s - gamma + 1.0) * gamma,
                       -0.5 * (s - 1.0) * (s + 1.0 - 2.0 * gamma), -0.25 * (alpha - beta) * (alpha - beta)};
  Domain domain;
  domain.r_min = -kMaxHalfWidth;
  domain.r_max = kMaxHalfWidth;
  return PtModel(PotentialModel(CaseId::case2, params, domain, k), 0.0);
}

double pt_defect(const PtModel& model, double r) {
  const PotentialModel& base = model.base();
  const double mirror = 2.0 * model.symmetry_center() - r;
  if (!base.domain().contains(r) || !base.domain().contains(mirror)) {
    throw DomainError("pt_defect: r and its mirror image must both lie in the domain");
  }
  const Complex v = potential_and_energy(base, r).V;
  const Complex v_mirror = potential_and_energy(base, mirror).V;
  return std::abs(v_mirror - std::conj(v));
}

std::vector<double> symmetric_grid(double center, double half_width) {
  std::vector<double> points;
  points.reserve(200);
  for (int k = 99; k >= 0; --k) points.push_back(center - half_width * (k + 1) / 100.0);
  for (int k = 0; k < 100; ++k) points.push_back(center + half_width * (k + 1) / 100.0);
  return points;
}

double scaled_pt_defect(const PtModel& model, double r) {
  return pt_defect(model, r) / std::max(1.0, std::abs(potential_and_energy(model.base(), r).V));
}

double max_pt_defect(const PtModel& model, int points_per_side) {
  const Domain& d = model.base().domain();
  const double x0 = model.symmetry_center();
  const double w = std::min(x0 - d.r_min, d.r_max - x0);
  double worst = 0.0;
  for (int k = 0; k < points_per_side; ++k) {
    const double t = w * (k + 1) / points_per_side;
    worst = std::max(worst, scaled_pt_defect(model, x0 + t));
  }
  return worst;
}

PtModel pt_generalize(CaseId id, double alpha, double beta, double gamma, double c1_magnitude, double c2) {
  if (!(c1_magnitude > 0.0) || !std::isfinite(c1_magnitude)) {
    throw ValidationError("c1 magnitude must be positive");
  }
  const CaseParams params{alpha, beta, gamma, Complex(0.0, c1_magnitude), c2};
  classify_params(params);
  if (coordinate_map(id, params, 0.3) == coordinate_map(id, params, -0.7)) {
    throw ValidationError("z(r) is constant for these parameters");
  }
  const Coefficients k = closed_form_coefficients(id, params, TableVariant::corrected);
  const double reach = kSearchHalfRange + kMaxHalfWidth + 1.0;
  const std::vector<double> singular = locate_singular_points(id, params, -reach, reach, 20000);

  const auto objective = [&](double x0) {
    const auto w = window_about(id, params, singular, x0);
    if (!w) return kInfinity;
    return defect_about(id, params, k, x0, w->half_width);
  };

  std::vector<double> coarse;
  for (int i = 0; i < kCoarseCenters; ++i) {
    coarse.push_back(kSearchHalfRange * (i - kCoarseCenters / 2) / (kCoarseCenters / 2));
  }
  std::vector<double> coarse_defect;
  for (double x0 : coarse) coarse_defect.push_back(objective(x0));

  std::vector<std::pair<double, double>> tried;  // (centre, defect)
  for (std::size_t i = 0; i < coarse.size(); ++i) tried.emplace_back(coarse[i], coarse_defect[i]);
  for (double s : singular) {
    if (std::abs(s) <= kSearchHalfRange + kCenterMatch) tried.emplace_back(s, objective(s));
  }

  const auto certified = [&] {
    return std::any_of(tried.begin(), tried.end(), [](const auto& t) { return t.second <= kPtTolerance; });
  };
  if (!certified()) {
    // Refine the best few coarse local minima; a symmetry centre that falls
    // between grid points shows up as one of them.
    std::vector<std::size_t> minima;
    for (std::size_t i = 0; i < coarse.size(); ++i) {
      const double d = coarse_defect[i];
      if (!std::isfinite(d)) continue;
      if (i > 0 && coarse_defect[i - 1] < d) continue;
      if (i + 1 < coarse.size() && coarse_defect[i + 1] < d) continue;
      minima.push_back(i);
    }
    std::sort(minima.begin(), minima.end(),
              [&](std::size_t a, std::size_t b) { return coarse_defect[a] < coarse_defect[b]; });
    if (minima.size() > kRefinedMinima) minima.resize(kRefinedMinima);
    const double cell = kSearchHalfRange / (kCoarseCenters / 2);
    for (std::size_t i : minima) tried.push_back(golden_refine(objective, coarse[i] - cell, coarse[i] + cell));
  }

  // Among certified centres prefer the one nearest 0, then the positive one;
  // otherwise report the smallest defect.
  double best = 0.0;
  double best_defect = kInfinity;
  for (const auto& [x0, d] : tried) {
    const double gap = std::abs(x0) - std::abs(best);
    const bool nearer = gap < -kCenterTie || (std::abs(gap) <= kCenterTie && x0 > best);
    const bool better = best_defect > kPtTolerance ? d < best_defect : (d <= kPtTolerance && nearer);
    if (better) {
      best = x0;
      best_defect = d;
    }
  }

  const auto window = window_about(id, params, singular, best);
  if (best_defect > kPtTolerance || !window) {
    std::vector<std::pair<double, double>> profile;
    if (window) {
      for (double r : symmetric_grid(best, window->half_width)) {
        if (r <= best) continue;
        double d = kInfinity;
        try {
          const Complex v = potential_at(id, params, k, r);
          d = std::abs(potential_at(id, params, k, 2.0 * best - r) - std::conj(v)) / std::max(1.0, std::abs(v));
        } catch (const SingularPointError&) {
        }
        profile.emplace_back(r, d);
      }
    }
    const std::string what =
        std::isfinite(best_defect)
            ? "no symmetry centre in [-pi, pi] brings the PT defect below 1e-12 (best " +
                  std::to_string(best_defect) + " at x0 = " + std::to_string(best) + ")"
            : "no admissible symmetry centre in [-pi, pi]: z(r) stays on or next to the cut";
    throw PtSymmetryError(what, best, best_defect, std::move(profile));
  }

  Domain domain;
  domain.r_min = best - window->half_width;
  domain.r_max = best + window->half_width;
  if (window->punctured) {
    domain.puncture = best;
    domain.puncture_radius = window->half_width / 200.0;
  }
  return PtModel(PotentialModel(id, params, domain, k), best);
}

}  // namespace exactpot
