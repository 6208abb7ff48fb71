#pragma once

#include <Eigen/Core>

#include <vector>

#include "exactpot/types.hpp"

namespace exactpot {

/// Uniform grid of n points on [r_min, r_max].
struct Grid {
  double r_min = 0.0;
  double r_max = 1.0;
  int n = 16;

  double spacing() const { return (r_max - r_min) / (n - 1); }
  double point(int i) const { return i == n - 1 ? r_max : r_min + i * spacing(); }
};

/// Throws ValidationError unless n >= 16 and r_max > r_min.
Grid make_grid(double r_min, double r_max, int n);

template <typename Scalar>
struct GridFunction {
  Grid grid;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> values;
};

template <typename Scalar, typename F>
GridFunction<Scalar> sample_on(const Grid& grid, F&& f) {
  GridFunction<Scalar> out{grid, Eigen::Matrix<Scalar, Eigen::Dynamic, 1>(grid.n)};
  for (int i = 0; i < grid.n; ++i) out.values(i) = static_cast<Scalar>(f(grid.point(i)));
  return out;
}

namespace detail {
void require_stencil(int index, int n, int half_width);
}

/// 5-point stencil (-f[-2] + 16 f[-1] - 30 f[0] + 16 f[1] - f[2]) / (12 h^2).
template <typename Scalar>
Scalar fd_second_derivative(const GridFunction<Scalar>& f, int index) {
  detail::require_stencil(index, static_cast<int>(f.values.size()), 2);
  const double h = f.grid.spacing();
  const auto& v = f.values;
  return (-v(index - 2) + 16.0 * v(index - 1) - 30.0 * v(index) + 16.0 * v(index + 1) - v(index + 2)) /
         (12.0 * h * h);
}

/// z'''/z' - 3/2 (z''/z')^2 with 7-point stencils for z', z'', z'''.
/// Throws DomainError when |z'| < 1e-10.
Complex schwarzian_numeric(const GridFunction<Complex>& z, int index);

struct SpectrumResult {
  std::vector<double> eigenvalues;  // ascending
  Grid grid;
};

/// k lowest eigenvalues of -D2 + diag(V) with Dirichlet walls at both grid
/// ends, D2 the 3-point second difference. Only the n-2 interior values of
/// V enter; the endpoint values are ignored. Sturm-count bisection.
SpectrumResult eigensolve_fd(const GridFunction<double>& V, int k);

/// Throws ValidationError if any interior |Im V| exceeds 1e-12 max(1, |V|).
SpectrumResult eigensolve_fd(const GridFunction<Complex>& V, int k);

/// Interior eigenvector for `eigenvalue` by inverse iteration, unit 2-norm,
/// length n-2.
Eigen::VectorXd eigenvector_fd(const GridFunction<double>& V, double eigenvalue);

/// Sign changes of v, ignoring entries below `relative_floor` * max|v|.
int count_interior_nodes(const Eigen::VectorXd& v, double relative_floor = 1e-8);

/// log2(err(h) / err(h/2)).
double richardson_exponent(double error_coarse, double error_fine);

}  // namespace exactpot
