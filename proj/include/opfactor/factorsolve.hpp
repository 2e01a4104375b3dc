// Factor-and-recombine solvers: polynomial roots by Aberth-Ehrlich
// simultaneous iteration, constant-coefficient ODE solution bases, and
// null-space decompositions of commuting matrix products.

#pragma once

#include "opfactor/operato.hpp"
#include "opfactor/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <vector>

namespace opfactor {

struct Polynomial {
  std::vector<Complex> coefficients;  // ascending degree, leading nonzero

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }

  Complex eval(Complex z) const {
    Complex acc(0, 0);
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
      acc = acc * z + *it;
    return acc;
  }

  Polynomial derivative() const {
    Polynomial d;
    for (std::size_t k = 1; k < coefficients.size(); ++k)
      d.coefficients.push_back(coefficients[k] * Complex(static_cast<double>(k), 0));
    if (d.coefficients.empty()) d.coefficients.push_back(Complex(0, 0));
    return d;
  }

  double max_abs_coefficient() const {
    double m = 0;
    for (const auto& c : coefficients) m = std::max(m, std::abs(c));
    return m;
  }
};

struct RootCluster {
  Complex root;
  int multiplicity = 1;
};

namespace detail {

// Evaluation noise floor: eps * sum |c_k| |z|^k.
inline double eval_noise(const Polynomial& p, Complex z) {
  double acc = 0, pw = 1;
  const double az = std::abs(z);
  for (const auto& c : p.coefficients) {
    acc += std::abs(c) * pw;
    pw *= az;
  }
  return std::numeric_limits<double>::epsilon() * acc;
}

// Simultaneous Aberth-Ehrlich iteration from deterministic points on a
// circle just outside the root bound.
inline std::vector<Complex> aberth_iterate(const Polynomial& p) {
  const int deg = p.degree();
  const Complex lead = p.coefficients.back();
  double ratio = 0;
  for (int k = 0; k < deg; ++k)
    ratio = std::max(ratio, std::abs(p.coefficients[k] / lead));
  const double radius = 1.0 + ratio;
  const double pi = 3.14159265358979323846;

  std::vector<Complex> z(deg);
  for (int j = 0; j < deg; ++j) {
    const double theta = 2.0 * pi * (static_cast<double>(j) + 0.25) / deg + 1.0 / deg;
    z[j] = radius * Complex(std::cos(theta), std::sin(theta));
  }

  const Polynomial dp = p.derivative();
  std::vector<bool> settled(deg, false);
  for (int iter = 0; iter < 500; ++iter) {
    double max_step = 0;
    for (int j = 0; j < deg; ++j) {
      if (settled[j]) continue;
      const Complex pv = p.eval(z[j]);
      if (std::abs(pv) <= 2.0 * eval_noise(p, z[j])) {
        settled[j] = true;
        continue;
      }
      const Complex dv = dp.eval(z[j]);
      Complex newton = (std::abs(dv) > 0) ? pv / dv : Complex(1e-3, 0);
      Complex repulse(0, 0);
      for (int k = 0; k < deg; ++k)
        if (k != j) repulse += Complex(1, 0) / (z[j] - z[k]);
      const Complex denom = Complex(1, 0) - newton * repulse;
      const Complex step = (std::abs(denom) > 1e-30) ? newton / denom : newton;
      z[j] -= step;
      max_step = std::max(max_step, std::abs(step));
    }
    if (max_step < 1e-12 * (1.0 + radius)) break;
  }
  return z;
}

}  // namespace detail

// Roots with multiplicities. Raw Aberth approximations are merged when
// closer than cluster_tol*(1+|r|) or than their residual-based inclusion
// radii (an m-fold root blurs to a ring of radius ~eps^(1/m), which can
// exceed the fixed threshold); cluster centroids are then polished by
// Newton on the (m-1)-th derivative.
inline std::vector<RootCluster> roots(const Polynomial& p, double cluster_tol = 1e-6) {
  if (p.coefficients.empty() || std::abs(p.coefficients.back()) == 0.0)
    throw std::invalid_argument("roots: zero leading coefficient");
  if (p.degree() < 1) throw std::invalid_argument("roots: degree must be >= 1");

  const std::vector<Complex> z = detail::aberth_iterate(p);
  const int deg = p.degree();
  const Polynomial dp = p.derivative();

  std::vector<double> radius(deg);  // per-root error estimate
  for (int j = 0; j < deg; ++j) {
    const Complex dv = dp.eval(z[j]);
    radius[j] = (std::abs(dv) > 0)
        ? static_cast<double>(deg) * std::abs(p.eval(z[j]) / dv)
        : cluster_tol;
  }

  // Union-find merge.
  std::vector<int> parent(deg);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int i = 0; i < deg; ++i)
    for (int j = i + 1; j < deg; ++j) {
      const double d = std::abs(z[i] - z[j]);
      const double merge_r = std::max(cluster_tol * (1.0 + std::abs(z[i])),
                                      3.0 * (radius[i] + radius[j]));
      if (d <= merge_r) parent[find(i)] = find(j);
    }

  std::vector<RootCluster> out;
  std::vector<bool> used(deg, false);
  for (int i = 0; i < deg; ++i) {
    const int rep = find(i);
    if (used[rep]) continue;
    used[rep] = true;
    Complex centroid(0, 0);
    int mult = 0;
    for (int j = 0; j < deg; ++j)
      if (find(j) == rep) {
        centroid += z[j];
        ++mult;
      }
    centroid /= static_cast<double>(mult);
    // Polish: the centroid is a simple root of p^(m-1).
    Polynomial q = p;
    for (int k = 1; k < mult; ++k) q = q.derivative();
    const Polynomial dq = q.derivative();
    for (int it = 0; it < 32; ++it) {
      const Complex qv = q.eval(centroid);
      const Complex dv = dq.eval(centroid);
      if (std::abs(dv) == 0.0) break;
      const Complex step = qv / dv;
      centroid -= step;
      if (std::abs(step) < 1e-15 * (1.0 + std::abs(centroid))) break;
    }
    out.push_back({centroid, mult});
  }
  std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
    if (a.root.real() != b.root.real()) return a.root.real() < b.root.real();
    return a.root.imag() < b.root.imag();
  });
  return out;
}

// One term x^power * exp(root * x) of a solution basis.
struct SolutionTerm {
  Complex root;
  int power = 0;
};

using OdeSolutionBasis = std::vector<SolutionTerm>;

// General solution basis of p(d/dx) u = 0: for each root r of multiplicity
// m, the functions x^k exp(r x), k = 0..m-1.
inline OdeSolutionBasis solve_ode(const Polynomial& p, double cluster_tol = 1e-6) {
  OdeSolutionBasis basis;
  for (const RootCluster& rc : roots(p, cluster_tol))
    for (int k = 0; k < rc.multiplicity; ++k)
      basis.push_back({rc.root, k});
  return basis;
}

namespace detail {

// q(x) e^{rx} under d/dx becomes (q' + r q) e^{rx}; q as ascending coeffs.
inline std::vector<Complex> differentiate_poly_exp(const std::vector<Complex>& q, Complex r) {
  std::vector<Complex> out(q.size() + 1, Complex(0, 0));
  for (std::size_t k = 0; k < q.size(); ++k) {
    out[k] += r * q[k];
    if (k >= 1) out[k - 1] += Complex(static_cast<double>(k), 0) * q[k];
  }
  while (out.size() > 1 && std::abs(out.back()) == 0.0) out.pop_back();
  return out;
}

inline Complex eval_poly(const std::vector<Complex>& q, double x) {
  Complex acc(0, 0);
  for (auto it = q.rbegin(); it != q.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace detail

// Applies p(d/dx) to each basis term in closed form and returns the largest
// absolute value over the sample points.
inline double ode_residual(const OdeSolutionBasis& basis, const Polynomial& p,
                           const std::vector<double>& sample_points) {
  for (double x : sample_points)
    if (!std::isfinite(x)) throw std::invalid_argument("ode_residual: non-finite sample point");
  double worst = 0;
  for (const SolutionTerm& term : basis) {
    std::vector<Complex> q(static_cast<std::size_t>(term.power) + 1, Complex(0, 0));
    q[static_cast<std::size_t>(term.power)] = Complex(1, 0);
    // Accumulate sum_k c_k D^k applied to q e^{rx}.
    std::vector<Complex> acc(1, Complex(0, 0));
    std::vector<Complex> deriv = q;
    for (std::size_t k = 0; k < p.coefficients.size(); ++k) {
      if (k > 0) deriv = detail::differentiate_poly_exp(deriv, term.root);
      if (acc.size() < deriv.size()) acc.resize(deriv.size(), Complex(0, 0));
      for (std::size_t i = 0; i < deriv.size(); ++i) acc[i] += p.coefficients[k] * deriv[i];
    }
    for (double x : sample_points) {
      const double r = std::abs(detail::eval_poly(acc, x) * std::exp(term.root * x));
      worst = std::max(worst, r);
    }
  }
  return worst;
}

struct NullDecomposition {
  Subspace n_a, n_b, n_ab;
  bool disjoint = false;
  bool containment_holds = false;  // sum(n_a, n_b) inside n_ab
  bool equality_holds = false;
  double containment_residual = 0.0;
  double witness_residual = -1.0;  // set when a witness decomposition exists
};

// For commuting A, B: the span of the factor null spaces sits inside the
// null space of the product; with disjoint null spaces it is the whole of it.
inline NullDecomposition null_product_decompose(const ComplexMatrix& a,
                                                const ComplexMatrix& b) {
  if (!commute_check(a, b).commutes)
    throw hypothesis_error("null_product_decompose: A and B must commute");
  NullDecomposition d;
  d.n_a = null_space(a);
  d.n_b = null_space(b);
  d.n_ab = null_space(ComplexMatrix(a * b));
  d.disjoint = intersect(d.n_a, d.n_b).dim() == 0;
  const Subspace span = sum(d.n_a, d.n_b);
  if (span.dim() == 0) {
    d.containment_residual = 0.0;
  } else {
    d.containment_residual = (span.basis - projector(d.n_ab) * span.basis).norm();
  }
  d.containment_holds = contains(d.n_ab, span);
  d.equality_holds = d.containment_holds && span.dim() == d.n_ab.dim();
  if (d.disjoint && d.equality_holds && d.n_ab.dim() > 0) {
    // Decompose the first null-product basis vector across the factor bases.
    ComplexMatrix concat(a.rows(), d.n_a.dim() + d.n_b.dim());
    if (d.n_a.dim() > 0) concat.leftCols(d.n_a.dim()) = d.n_a.basis;
    if (d.n_b.dim() > 0) concat.rightCols(d.n_b.dim()) = d.n_b.basis;
    const ComplexVector x = d.n_ab.basis.col(0);
    const ComplexVector coeffs = concat.colPivHouseholderQr().solve(x);
    d.witness_residual = (concat * coeffs - x).norm();
  }
  return d;
}

struct CountingReport {
  Eigen::Index n_a = 0, n_b = 0, n_ab = 0;
  bool sum_equals = false;
};

// n_ab = n_a + n_b for commuting factors with disjoint null spaces.
inline CountingReport counting_check(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!commute_check(a, b).commutes)
    throw hypothesis_error("counting_check: A and B must commute");
  const Subspace na = null_space(a);
  const Subspace nb = null_space(b);
  if (intersect(na, nb).dim() != 0)
    throw hypothesis_error("counting_check: null spaces are not disjoint");
  CountingReport rep;
  rep.n_a = na.dim();
  rep.n_b = nb.dim();
  rep.n_ab = null_space(ComplexMatrix(a * b)).dim();
  rep.sum_equals = rep.n_ab == rep.n_a + rep.n_b;
  return rep;
}

struct ReductionReport {
  Subspace n_a, n_b, n_ab;
  double reduce_residual = 0.0;
  bool conclusion_holds = false;  // N(AB) = N(A) + N(B)
};

// Requires the null space of A to reduce B (both the null space and its
// orthocomplement invariant under B); commutativity of A and B is not needed.
inline ReductionReport prop31_check(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw std::invalid_argument("prop31_check: equal square dimensions required");
  ReductionReport rep;
  rep.n_a = null_space(a);
  const ComplexMatrix p = projector(rep.n_a);
  // P B = B P iff both P(H) and its complement are invariant under B.
  rep.reduce_residual = (p * b - b * p).norm();
  if (rep.reduce_residual > 1e-8 * (1.0 + b.norm()))
    throw hypothesis_error("prop31_check: null space of A does not reduce B");
  rep.n_b = null_space(b);
  rep.n_ab = null_space(ComplexMatrix(a * b));
  const Subspace span = sum(rep.n_a, rep.n_b);
  rep.conclusion_holds =
      contains(rep.n_ab, span) && contains(span, rep.n_ab) && span.dim() == rep.n_ab.dim();
  return rep;
}

}  // namespace opfactor
