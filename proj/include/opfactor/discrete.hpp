// Periodic-grid discretization of d/dx through the FFT: diagonal Fourier
// symbols, the translation group, generator convergence checks, and the
// factored-ODE / wave-equation null-space demonstrations.

#pragma once

#include "opfactor/factorsolve.hpp"

#include <cmath>
#include <vector>

namespace opfactor {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

struct PeriodicGrid {
  Eigen::Index n = 0;   // power of two, >= 4
  double length = 0.0;  // period L; points x_j = j L / n

  PeriodicGrid(Eigen::Index n_, double length_) : n(n_), length(length_) {
    if (n < 4 || (n & (n - 1)) != 0)
      throw std::invalid_argument("PeriodicGrid: n must be a power of two >= 4");
    if (!(length > 0)) throw std::invalid_argument("PeriodicGrid: length must be positive");
  }

  double point(Eigen::Index j) const { return static_cast<double>(j) * length / static_cast<double>(n); }

  // Signed frequency of FFT bin k, with Nyquist mapped to +n/2.
  Eigen::Index signed_frequency(Eigen::Index k) const { return k <= n / 2 ? k : k - n; }
};

// Operator diagonal in the Fourier basis.
struct GridOperator {
  PeriodicGrid grid;
  ComplexVector fourier_symbol;  // length n

  ComplexVector apply(const ComplexVector& v) const {
    if (v.size() != grid.n) throw std::invalid_argument("GridOperator: size mismatch");
    ComplexVector hat = fft(v);
    hat.array() *= fourier_symbol.array();
    return ifft(hat);
  }

  ComplexMatrix densify() const {
    ComplexMatrix m(grid.n, grid.n);
    for (Eigen::Index j = 0; j < grid.n; ++j)
      m.col(j) = apply(ComplexVector::Unit(grid.n, j));
    return m;
  }
};

// d/dx with symbol i 2 pi k / L, Nyquist carried at +n/2. The symbol is
// purely imaginary, so the dense matrix is exactly skew-Hermitian, and the
// kernel of D - i w I is the single mode k = w for every in-band w.
inline GridOperator differentiation_operator(const PeriodicGrid& grid) {
  ComplexVector symbol(grid.n);
  for (Eigen::Index k = 0; k < grid.n; ++k) {
    const Eigen::Index freq = grid.signed_frequency(k);
    symbol(k) = Complex(0, kTwoPi * static_cast<double>(freq) / grid.length);
  }
  return GridOperator{grid, symbol};
}

// U_t with symbol exp(i 2 pi k t / L); shifts by whole grid spacings are
// exact index rotations.
inline GridOperator translation_group(const PeriodicGrid& grid, double t) {
  ComplexVector symbol(grid.n);
  for (Eigen::Index k = 0; k < grid.n; ++k) {
    const double omega = kTwoPi * static_cast<double>(grid.signed_frequency(k)) / grid.length;
    symbol(k) = std::exp(Complex(0, omega * t));
  }
  return GridOperator{grid, symbol};
}

struct ConvergenceReport {
  std::vector<double> step_sizes;
  std::vector<double> errors;
  double fitted_slope = 0.0;  // least-squares slope of log error vs log step
};

// || (U_t f - f)/t - Df || for shrinking t; the forward difference of the
// translation group converges to the generator at first order.
inline ConvergenceReport stone_generator_check(const PeriodicGrid& grid,
                                               const ComplexVector& f,
                                               const std::vector<double>& step_sizes) {
  if (step_sizes.empty()) throw std::invalid_argument("stone_generator_check: empty step list");
  if (f.size() != grid.n) throw std::invalid_argument("stone_generator_check: size mismatch");
  // Band limit |k| <= n/4 keeps aliasing out of the limit.
  const ComplexVector hat = fft(f);
  for (Eigen::Index k = 0; k < grid.n; ++k) {
    const Eigen::Index freq = grid.signed_frequency(k);
    if (std::abs(static_cast<double>(freq)) > static_cast<double>(grid.n) / 4.0 &&
        std::abs(hat(k)) > 1e-12 * f.norm())
      throw std::invalid_argument("stone_generator_check: f is not band-limited to n/4");
  }
  const GridOperator d = differentiation_operator(grid);
  const ComplexVector df = d.apply(f);
  ConvergenceReport rep;
  rep.step_sizes = step_sizes;
  for (double t : step_sizes) {
    const ComplexVector ut_f = translation_group(grid, t).apply(f);
    rep.errors.push_back(((ut_f - f) / t - df).norm());
  }
  // log-log least squares.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (std::size_t i = 0; i < rep.errors.size(); ++i) {
    if (rep.errors[i] <= 0) continue;
    const double x = std::log(rep.step_sizes[i]);
    const double y = std::log(rep.errors[i]);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    ++count;
  }
  rep.fitted_slope = (count >= 2) ? (count * sxy - sx * sy) / (count * sxx - sx * sx) : 0.0;
  return rep;
}

// A = D - i(2 pi w1 / L) I and B = D - i(2 pi w2 / L) I commute; their
// kernels are single Fourier modes, so the product null space shows the
// clean counting behavior (and no Jordan growth when w1 = w2, since D is
// normal).
inline NullDecomposition factored_ode_demo(const PeriodicGrid& grid, Eigen::Index w1,
                                           Eigen::Index w2) {
  if (std::abs(static_cast<double>(w1)) > static_cast<double>(grid.n / 2 - 1) ||
      std::abs(static_cast<double>(w2)) > static_cast<double>(grid.n / 2 - 1))
    throw std::invalid_argument("factored_ode_demo: frequency out of band");
  const ComplexMatrix d = differentiation_operator(grid).densify();
  const ComplexMatrix id = ComplexMatrix::Identity(grid.n, grid.n);
  const ComplexMatrix a = d - Complex(0, kTwoPi * static_cast<double>(w1) / grid.length) * id;
  const ComplexMatrix b = d - Complex(0, kTwoPi * static_cast<double>(w2) / grid.length) * id;
  return null_product_decompose(a, b);
}

struct WaveFactorizationReport {
  Eigen::Index dim_n_a = 0, dim_n_b = 0, dim_n_ab = 0;
  Eigen::Index dim_intersection = 0;
  bool equality_holds = false;  // sum of factor null spaces = product null space
  double witness_residual = 0.0;
};

namespace detail {
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}
}  // namespace detail

// Factored wave equation d2u/dxdy = 0 on the tensor grid: A = Dx (x) I,
// B = I (x) Dy. Null spaces overlap in the constants, yet the sum still
// fills the product null space (commuting skew-adjoint factors).
inline WaveFactorizationReport wave_factorization_demo(const PeriodicGrid& gx,
                                                       const PeriodicGrid& gy) {
  if (gx.n * gy.n > 4096)
    throw std::invalid_argument("wave_factorization_demo: tensor grid too large");
  const ComplexMatrix dx = differentiation_operator(gx).densify();
  const ComplexMatrix dy = differentiation_operator(gy).densify();
  const ComplexMatrix a = detail::kron(dx, ComplexMatrix::Identity(gy.n, gy.n));
  const ComplexMatrix b = detail::kron(ComplexMatrix::Identity(gx.n, gx.n), dy);
  const Subspace n_a = null_space(a);
  const Subspace n_b = null_space(b);
  const Subspace n_ab = null_space(ComplexMatrix(a * b));
  const Subspace span = sum(n_a, n_b);
  WaveFactorizationReport rep;
  rep.dim_n_a = n_a.dim();
  rep.dim_n_b = n_b.dim();
  rep.dim_n_ab = n_ab.dim();
  rep.dim_intersection = intersect(n_a, n_b).dim();
  rep.equality_holds =
      contains(n_ab, span) && contains(span, n_ab) && span.dim() == n_ab.dim();
  // Decompose the constant function as F(x) + G(y).
  const ComplexVector ones = ComplexVector::Constant(gx.n * gy.n, Complex(1, 0));
  ComplexMatrix concat(a.rows(), n_a.dim() + n_b.dim());
  concat.leftCols(n_a.dim()) = n_a.basis;
  concat.rightCols(n_b.dim()) = n_b.basis;
  const ComplexVector coeffs = concat.colPivHouseholderQr().solve(ones);
  rep.witness_residual = (concat * coeffs - ones).norm();
  return rep;
}

}  // namespace opfactor
