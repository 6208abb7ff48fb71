#include "exactpot/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace exactpot {

namespace detail {

void require_stencil(int index, int n, int half_width) {
  if (index < half_width || index > n - 1 - half_width) {
    throw DomainError("stencil at index " + std::to_string(index) + " runs off the grid");
  }
}

}  // namespace detail

namespace {

struct Tridiagonal {
  Eigen::VectorXd diagonal;
  double off = 0.0;  // constant off-diagonal
};

Tridiagonal dirichlet_operator(const GridFunction<double>& V) {
  const int n = V.grid.n;
  if (V.values.size() != n) throw ValidationError("grid function length does not match its grid");
  const double h = V.grid.spacing();
  Tridiagonal t;
  t.diagonal = V.values.segment(1, n - 2).array() + 2.0 / (h * h);
  t.off = -1.0 / (h * h);
  if (!t.diagonal.allFinite()) throw ValidationError("potential must be finite at interior grid points");
  return t;
}

// Number of eigenvalues strictly below x (Sturm sequence of LDL^T pivots).
int sturm_count(const Tridiagonal& t, double x) {
  const double e2 = t.off * t.off;
  const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, e2);
  int count = 0;
  double q = t.diagonal(0) - x;
  for (Eigen::Index i = 0;; ++i) {
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
    if (i + 1 == t.diagonal.size()) break;
    q = t.diagonal(i + 1) - x - e2 / q;
  }
  return count;
}

}  // namespace

Grid make_grid(double r_min, double r_max, int n) {
  if (!std::isfinite(r_min) || !std::isfinite(r_max) || !(r_max > r_min)) {
    throw ValidationError("grid needs finite r_min < r_max");
  }
  if (n < 16) throw ValidationError("grid needs at least 16 points");
  return Grid{r_min, r_max, n};
}

Complex schwarzian_numeric(const GridFunction<Complex>& z, int index) {
  detail::require_stencil(index, static_cast<int>(z.values.size()), 3);
  const double h = z.grid.spacing();
  const auto f = [&](int k) { return z.values(index + k); };
  const Complex d1 = (-f(-3) + 9.0 * f(-2) - 45.0 * f(-1) + 45.0 * f(1) - 9.0 * f(2) + f(3)) / (60.0 * h);
  const Complex d2 = (2.0 * f(-3) - 27.0 * f(-2) + 270.0 * f(-1) - 490.0 * f(0) + 270.0 * f(1) - 27.0 * f(2) +
                      2.0 * f(3)) /
                     (180.0 * h * h);
  const Complex d3 = (f(-3) - 8.0 * f(-2) + 13.0 * f(-1) - 13.0 * f(1) + 8.0 * f(2) - f(3)) / (8.0 * h * h * h);
  if (std::abs(d1) < 1e-10) throw DomainError("z' vanishes; Schwarzian undefined");
  const Complex ratio = d2 / d1;
  return d3 / d1 - 1.5 * ratio * ratio;
}

SpectrumResult eigensolve_fd(const GridFunction<double>& V, int k) {
  const int interior = V.grid.n - 2;
  if (k < 1 || k > interior) throw ValidationError("eigenvalue count must be in [1, n-2]");
  const Tridiagonal t = dirichlet_operator(V);
  const double radius = 2.0 * std::abs(t.off);
  const double lo = t.diagonal.minCoeff() - radius;
  const double hi = t.diagonal.maxCoeff() + radius;
  constexpr double eps = std::numeric_limits<double>::epsilon();

  SpectrumResult result{{}, V.grid};
  result.eigenvalues.reserve(k);
  double floor = lo;
  for (int j = 0; j < k; ++j) {
    double a = floor;
    double b = hi;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b || b - a <= 2.0 * eps * std::max(std::abs(a), std::abs(b))) break;
      if (sturm_count(t, mid) <= j) {
        a = mid;
      } else {
        b = mid;
      }
    }
    const double lambda = 0.5 * (a + b);
    result.eigenvalues.push_back(lambda);
    floor = a;
  }
  return result;
}

SpectrumResult eigensolve_fd(const GridFunction<Complex>& V, int k) {
  GridFunction<double> real_part{V.grid, V.values.real()};
  for (Eigen::Index i = 1; i + 1 < V.values.size(); ++i) {
    const Complex v = V.values(i);
    if (std::abs(v.imag()) > 1e-12 * std::max(1.0, std::abs(v))) {
      throw ValidationError("eigensolve_fd needs a real potential (Im V != 0 at r = " +
                            std::to_string(V.grid.point(static_cast<int>(i))) + ")");
    }
  }
  return eigensolve_fd(real_part, k);
}

Eigen::VectorXd eigenvector_fd(const GridFunction<double>& V, double eigenvalue) {
  const Tridiagonal t = dirichlet_operator(V);
  const Eigen::Index m = t.diagonal.size();
  const double scale = t.diagonal.cwiseAbs().maxCoeff() + 2.0 * std::abs(t.off);
  const double tiny = std::numeric_limits<double>::epsilon() * scale;

  // LU of T - lambda I without pivoting (Thomas); tiny pivots are nudged.
  Eigen::VectorXd pivot(m);
  pivot(0) = t.diagonal(0) - eigenvalue;
  if (std::abs(pivot(0)) < tiny) pivot(0) = tiny;
  for (Eigen::Index i = 1; i < m; ++i) {
    pivot(i) = t.diagonal(i) - eigenvalue - t.off * t.off / pivot(i - 1);
    if (std::abs(pivot(i)) < tiny) pivot(i) = tiny;
  }
  Eigen::VectorXd x = Eigen::VectorXd::Ones(m);
  for (int iteration = 0; iteration < 3; ++iteration) {
    for (Eigen::Index i = 1; i < m; ++i) x(i) -= t.off / pivot(i - 1) * x(i - 1);
    x(m - 1) /= pivot(m - 1);
    for (Eigen::Index i = m - 2; i >= 0; --i) x(i) = (x(i) - t.off * x(i + 1)) / pivot(i);
    x.normalize();
  }
  return x;
}

int count_interior_nodes(const Eigen::VectorXd& v, double relative_floor) {
  const double floor = relative_floor * v.cwiseAbs().maxCoeff();
  int nodes = 0;
  int last_sign = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) <= floor) continue;
    const int sign = v(i) > 0.0 ? 1 : -1;
    if (last_sign != 0 && sign != last_sign) ++nodes;
    last_sign = sign;
  }
  return nodes;
}

double richardson_exponent(double error_coarse, double error_fine) {
  return std::log2(std::abs(error_coarse) / std::abs(error_fine));
}

}  // namespace exactpot
