#include "exactpot/table_audit.hpp"

#include <algorithm>
#include <cmath>

namespace exactpot {

namespace {

struct Reading {
  std::string name;
  ShapeFunction shapes;
};

std::vector<Reading> readings_for(CaseId id, const CaseParams& params) {
  if (id != CaseId::case6) {
    return {{"printed", [=](double r) { return shape_functions(id, params, r); }}};
  }
  const double c1 = params.c1.real();
  const double c2 = params.c2.real();
  std::vector<Reading> out;
  for (const bool exp_c2 : {false, true}) {
    for (const bool quarter : {false, true}) {
      const double kappa = exp_c2 ? std::exp(c2) : c2;
      const double lambda = quarter ? 0.25 : 1.0;
      std::string name = exp_c2 ? "e^c2" : "c2";
      name += quarter ? " with 1/4" : " without 1/4";
      out.push_back({name, [=](double r) {
                       const double e = std::exp(c1 * r);
                       const double w = e / (e + kappa);
                       return ShapeValues{lambda * w * w, lambda * w};
                     }});
    }
  }
  return out;
}

}  // namespace

CaseParams random_case_params(CaseId id, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> hyper(-4.0, 4.0);
  std::uniform_real_distribution<double> scale(0.5, 3.0);
  double c2_lo = -2.0;
  double c2_hi = 2.0;
  switch (id) {
    case CaseId::case1: c2_lo = -3.0, c2_hi = -0.2; break;
    case CaseId::case4:
    case CaseId::case6: c2_lo = 0.2, c2_hi = 3.0; break;
    default: break;
  }
  std::uniform_real_distribution<double> shift(c2_lo, c2_hi);
  CaseParams p;
  p.alpha = hyper(rng);
  p.beta = hyper(rng);
  p.gamma = hyper(rng);
  p.c1 = scale(rng);
  p.c2 = shift(rng);
  return p;
}

std::string CaseAudit::consistent_reading() const {
  for (const ReadingResult& r : readings) {
    if (r.matches == draws && draws > 0) return r.name;
  }
  return "";
}

CaseAudit audit_case(CaseId id, int draws, std::uint64_t seed) {
  if (draws < 1) throw ValidationError("audit needs at least one draw");
  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(case_number(id)));
  CaseAudit audit;
  audit.id = id;
  audit.draws = draws;
  for (int i = 0; i < draws; ++i) {
    const CaseParams params = random_case_params(id, rng);
    const std::vector<Reading> readings = readings_for(id, params);
    if (audit.readings.empty()) {
      for (const Reading& r : readings) audit.readings.push_back({r.name});
    }
    try {
      const Domain domain = preimage_domain(id, params);
      const RecoveryReport own = recover_with_shapes(
          id, params, domain, [&](double r) { return shape_functions(id, params, r); });
      audit.worst_shape_misfit = std::max(audit.worst_shape_misfit, own.validation_residual);
      audit.worst_corrected =
          std::max(audit.worst_corrected,
                   coefficient_distance(own.coefficients, closed_form_coefficients(id, params, TableVariant::corrected)));
      const Coefficients printed = closed_form_coefficients(id, params, TableVariant::printed);
      for (std::size_t k = 0; k < readings.size(); ++k) {
        const RecoveryReport rep = recover_with_shapes(id, params, domain, readings[k].shapes);
        const double distance = coefficient_distance(rep.coefficients, printed);
        ReadingResult& out = audit.readings[k];
        out.worst_distance = std::max(out.worst_distance, distance);
        out.worst_misfit = std::max(out.worst_misfit, rep.validation_residual);
        if (distance <= kAuditTolerance && rep.validation_residual <= kAuditTolerance) ++out.matches;
      }
    } catch (const Error&) {
      ++audit.errors;
    }
  }
  return audit;
}

}  // namespace exactpot
