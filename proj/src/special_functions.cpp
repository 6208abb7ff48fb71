#include "exactpot/special_functions.hpp"

#include <algorithm>
#include <array>
#include <numbers>

namespace exactpot {

namespace {

constexpr int kMaxSeriesTerms = 20000;
constexpr double kSeriesTolerance = 1e-15;
constexpr double kDirectRadius = 0.5;
constexpr double kConnectionIntegerGap = 0.05;
constexpr int kMaxTaylorTerms = 2000;

// B_{2k} / (2k (2k-1)) for k = 1..8.
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,   -1.0 / 360.0,  1.0 / 1260.0,     -1.0 / 1680.0,
    1.0 / 1188.0, -691.0 / 360360.0, 1.0 / 156.0, -3617.0 / 122400.0};

Complex stirling_log_gamma(Complex z) {
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex tail = 0.0;
  Complex power = inv;
  for (double coefficient : kStirling) {
    tail += coefficient * power;
    power *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi) + tail;
}

void require_finite_input(const HypergeometricInput& in) {
  require_finite(in.alpha, "alpha");
  require_finite(in.beta, "beta");
  require_finite(in.gamma, "gamma");
  require_finite(in.z, "z");
}

double distance_to_integer(Complex x) {
  return std::hypot(x.real() - std::round(x.real()), x.imag());
}

bool is_terminating(const HypergeometricInput& in) {
  return is_nonpositive_integer(in.alpha) || is_nonpositive_integer(in.beta);
}

// Polynomial case: one of alpha, beta equals -n.
Complex terminating_sum(const HypergeometricInput& in) {
  const bool alpha_terminates = is_nonpositive_integer(in.alpha);
  const bool beta_terminates = is_nonpositive_integer(in.beta);
  int degree = 0;
  Complex a = in.alpha;
  Complex b = in.beta;
  if (alpha_terminates && beta_terminates) {
    degree = static_cast<int>(std::min(-std::round(a.real()), -std::round(b.real())));
  } else if (alpha_terminates) {
    degree = static_cast<int>(-std::round(a.real()));
  } else {
    degree = static_cast<int>(-std::round(b.real()));
  }
  if (alpha_terminates) a = std::round(a.real());
  if (beta_terminates) b = std::round(b.real());

  Complex sum = 1.0;
  Complex term = 1.0;
  for (int k = 0; k < degree; ++k) {
    const Complex denominator = in.gamma + static_cast<double>(k);
    if (std::abs(denominator) < 1e-12) {
      throw PoleError("2F1: gamma is a non-positive integer reached before the series terminates");
    }
    term *= (a + static_cast<double>(k)) * (b + static_cast<double>(k)) / (denominator * (k + 1.0)) * in.z;
    sum += term;
  }
  return sum;
}

Complex direct_series(Complex a, Complex b, Complex c, Complex z) {
  Complex sum = 1.0;
  Complex term = 1.0;
  int small_run = 0;
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    const Complex denominator = c + static_cast<double>(k);
    if (std::abs(denominator) < 1e-12) throw PoleError("2F1: gamma is a non-positive integer");
    term *= (a + static_cast<double>(k)) * (b + static_cast<double>(k)) / (denominator * (k + 1.0)) * z;
    sum += term;
    if (term == Complex(0.0)) return sum;
    if (std::abs(term) < kSeriesTolerance * std::abs(sum)) {
      if (++small_run == 3) return sum;
    } else {
      small_run = 0;
    }
  }
  throw ConvergenceError("2F1: series did not converge within 20000 terms");
}

struct OdeState {
  Complex u;
  Complex du;
};

// One Taylor step of z(1-z)u'' + [c - (a+b+1)z]u' - ab u = 0 from z0 to z0 + t.
// Works with d_k = c_k t^k so no powers of t are formed explicitly.
OdeState taylor_step(Complex a, Complex b, Complex c, Complex z0, Complex t, OdeState state) {
  const Complex p0 = z0 * (1.0 - z0);
  const Complex p1 = 1.0 - 2.0 * z0;
  const Complex q0 = c - (a + b + 1.0) * z0;

  Complex d_prev = state.u;
  Complex d_curr = state.du * t;
  Complex u = d_prev + d_curr;
  Complex du_scaled = d_curr;
  double scale = std::max(std::abs(d_prev), std::abs(d_curr));
  int small_run = 0;
  for (int k = 0; k < kMaxTaylorTerms; ++k) {
    const double kd = k;
    const Complex x = p1 * kd * (kd + 1.0) + q0 * (kd + 1.0);
    const Complex y = (kd + a) * (kd + b);
    const Complex d_next = -(x * d_curr * t - y * d_prev * t * t) / (p0 * (kd + 2.0) * (kd + 1.0));
    u += d_next;
    du_scaled += (kd + 2.0) * d_next;
    scale = std::max(scale, std::abs(d_next));
    if (std::abs(d_next) * (kd + 2.0) <= 1e-17 * scale) {
      if (++small_run == 2) return {u, du_scaled / t};
    } else {
      small_run = 0;
    }
    d_prev = d_curr;
    d_curr = d_next;
  }
  throw ConvergenceError("2F1: Taylor continuation step did not converge");
}

OdeState march(Complex a, Complex b, Complex c, Complex from, Complex to, OdeState state) {
  Complex here = from;
  while (here != to) {
    const Complex remaining = to - here;
    const double radius = std::min(std::abs(here), std::abs(1.0 - here));
    if (radius < 1e-14) throw SingularPointError("2F1: continuation path hits a singular point");
    const double reach = 0.5 * radius;
    const bool last = std::abs(remaining) <= reach;
    const Complex step = last ? remaining : remaining / std::abs(remaining) * reach;
    state = taylor_step(a, b, c, here, step, state);
    here = last ? to : here + step;
  }
  return state;
}

OdeState series_state(Complex a, Complex b, Complex c, Complex z) {
  const Complex u = direct_series(a, b, c, z);
  const Complex du = a * b / c * direct_series(a + 1.0, b + 1.0, c + 1.0, z);
  return {u, du};
}

Complex continue_along(const HypergeometricInput& in, std::initializer_list<Complex> waypoints) {
  const Complex a = in.alpha;
  const Complex b = in.beta;
  const Complex c = in.gamma;
  auto it = waypoints.begin();
  Complex here = *it++;
  OdeState state = series_state(a, b, c, here);
  for (; it != waypoints.end(); ++it) {
    state = march(a, b, c, here, *it, state);
    here = *it;
  }
  return state.u;
}

Complex gauss_sum(Complex a, Complex b, Complex c) {
  const Complex s = c - a - b;
  return std::exp(log_gamma(c) + log_gamma(s)) * reciprocal_gamma(c - a) * reciprocal_gamma(c - b);
}

bool on_cut(Complex z) { return z.imag() == 0.0 && z.real() >= 1.0; }

}  // namespace

Complex log_gamma(Complex x) {
  require_finite(x, "log_gamma argument");
  if (is_nonpositive_integer(x, 0.0)) throw PoleError("log_gamma: pole at a non-positive integer");
  // Recurrence Gamma(x) = Gamma(x+n) / (x (x+1) ... (x+n-1)); summing the
  // principal logs keeps the result on the principal branch.
  Complex shift_logs = 0.0;
  Complex shifted = x;
  while (shifted.real() < 15.0) {
    shift_logs += std::log(shifted);
    shifted += 1.0;
  }
  return stirling_log_gamma(shifted) - shift_logs;
}

Complex gamma_function(Complex x) { return std::exp(log_gamma(x)); }

Complex reciprocal_gamma(Complex x) {
  if (is_nonpositive_integer(x, 0.0)) return 0.0;
  return std::exp(-log_gamma(x));
}

namespace hyp2f1_route {

Complex series(const HypergeometricInput& in) {
  require_finite_input(in);
  if (std::abs(in.z) >= 1.0) throw DomainError("2F1 series: requires |z| < 1");
  if (is_terminating(in)) return terminating_sum(in);
  return direct_series(in.alpha, in.beta, in.gamma, in.z);
}

Complex pfaff(const HypergeometricInput& in) {
  require_finite_input(in);
  if (on_cut(in.z)) throw BranchCutError("2F1 Pfaff: z on the branch cut [1, inf)");
  const Complex w = in.z / (in.z - 1.0);
  const Complex inner = gauss_2f1({in.alpha, in.gamma - in.beta, in.gamma, w});
  return std::pow(1.0 - in.z, -in.alpha) * inner;
}

Complex connection(const HypergeometricInput& in) {
  require_finite_input(in);
  if (on_cut(in.z)) throw BranchCutError("2F1 connection: z on the branch cut [1, inf)");
  const Complex a = in.alpha;
  const Complex b = in.beta;
  const Complex c = in.gamma;
  const Complex s = c - a - b;
  if (distance_to_integer(s) < 1e-12) {
    throw DomainError("2F1 connection: gamma - alpha - beta is an integer");
  }
  const Complex w = 1.0 - in.z;
  const Complex log_gamma_c = log_gamma(c);

  Complex result = 0.0;
  const Complex first_weight = reciprocal_gamma(c - a) * reciprocal_gamma(c - b);
  if (first_weight != Complex(0.0)) {
    result += std::exp(log_gamma_c + log_gamma(s)) * first_weight * gauss_2f1({a, b, 1.0 - s, w});
  }
  const Complex second_weight = reciprocal_gamma(a) * reciprocal_gamma(b);
  if (second_weight != Complex(0.0)) {
    result += std::pow(w, s) * std::exp(log_gamma_c + log_gamma(-s)) * second_weight *
              gauss_2f1({c - a, c - b, 1.0 + s, w});
  }
  return result;
}

Complex continuation(const HypergeometricInput& in) {
  require_finite_input(in);
  if (on_cut(in.z)) throw BranchCutError("2F1 continuation: z on the branch cut [1, inf)");
  if (is_nonpositive_integer(in.gamma)) throw PoleError("2F1: gamma is a non-positive integer");
  const double magnitude = std::abs(in.z);
  if (magnitude <= 0.4) return direct_series(in.alpha, in.beta, in.gamma, in.z);
  // A ray just above or below the cut would graze z = 1; detour on the same side.
  const double lift = 0.5 * std::min(1.0, in.z.real() - 1.0);
  if (in.z.real() > 1.0 && std::abs(in.z.imag()) < lift) {
    const double side = in.z.imag() < 0.0 ? -1.0 : 1.0;
    return continue_along(in, {Complex(0.4, 0.0), Complex(0.5, 0.5 * side), Complex(in.z.real(), side * lift), in.z});
  }
  return continue_along(in, {in.z / magnitude * 0.4, in.z});
}

}  // namespace hyp2f1_route

Complex gauss_2f1(const HypergeometricInput& in, CutPolicy cut) {
  require_finite_input(in);
  const Complex z = in.z;
  if (z == Complex(0.0)) return 1.0;
  if (is_terminating(in)) return terminating_sum(in);
  if (is_nonpositive_integer(in.gamma)) {
    throw PoleError("2F1: gamma is a non-positive integer and the series does not terminate");
  }
  if (std::abs(z) <= kDirectRadius) return direct_series(in.alpha, in.beta, in.gamma, z);

  const Complex excess = in.gamma - in.alpha - in.beta;
  if (z == Complex(1.0)) {
    if (excess.real() > 0.0) return gauss_sum(in.alpha, in.beta, in.gamma);
    throw BranchCutError("2F1: divergent at z = 1 when Re(gamma - alpha - beta) <= 0");
  }
  if (on_cut(z)) {
    if (cut == CutPolicy::reject) throw BranchCutError("2F1: z on the branch cut [1, inf)");
    const double lift = 0.5 * std::min(1.0, z.real() - 1.0);
    return continue_along(in, {Complex(0.4, 0.0), Complex(0.5, 0.5), Complex(z.real(), lift), z});
  }
  if (std::abs(z / (z - 1.0)) <= kDirectRadius) return hyp2f1_route::pfaff(in);
  if (std::abs(1.0 - z) <= kDirectRadius && distance_to_integer(excess) >= kConnectionIntegerGap) {
    return hyp2f1_route::connection(in);
  }
  return hyp2f1_route::continuation(in);
}

Complex gauss_2f1_derivative(const HypergeometricInput& in, CutPolicy cut) {
  require_finite_input(in);
  if (in.alpha == Complex(0.0) || in.beta == Complex(0.0)) return 0.0;
  if (in.gamma == Complex(0.0)) throw PoleError("2F1 derivative: gamma = 0");
  const Complex prefactor = in.alpha * in.beta / in.gamma;
  return prefactor * gauss_2f1({in.alpha + 1.0, in.beta + 1.0, in.gamma + 1.0, in.z}, cut);
}

}  // namespace exactpot
