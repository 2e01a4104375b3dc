// Closed subspaces of C^n as orthonormal frames, with the angle metric and
// lattice operations (sum, intersection, complement).

#pragma once

#include "opfactor/numkernel.hpp"

namespace opfactor {

// Orthonormal-frame representation. k = 0 columns encodes the zero subspace.
struct Subspace {
  Eigen::Index ambient_dim = 0;
  ComplexMatrix basis;  // ambient_dim x k, orthonormal columns

  Eigen::Index dim() const { return basis.cols(); }

  static Subspace zero(Eigen::Index n) { return Subspace{n, ComplexMatrix(n, 0)}; }

  static Subspace full(Eigen::Index n) {
    return Subspace{n, ComplexMatrix(ComplexMatrix::Identity(n, n))};
  }

  // Builds a subspace from a (possibly non-orthonormal) spanning set.
  static Subspace from_span(const ComplexMatrix& span);
};

namespace detail {
inline double rank_tol(const RealVector& sigma, Eigen::Index rows, Eigen::Index cols) {
  if (sigma.size() == 0) return 0.0;
  return static_cast<double>(std::max(rows, cols)) *
         std::numeric_limits<double>::epsilon() * sigma(0);
}
}  // namespace detail

// Orthonormal basis of {x : Tx ~ 0}, from right-singular vectors below the
// rank tolerance.
inline Subspace null_space(const ComplexMatrix& t) {
  if (t.size() == 0) throw std::invalid_argument("null_space: empty matrix");
  const SvdDecomposition sd = svd(t);
  const double tau = detail::rank_tol(sd.singular_values, t.rows(), t.cols());
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sd.singular_values.size(); ++i)
    if (sd.singular_values(i) > tau) ++rank;
  // Right-singular vectors for vanishing sigma, plus the co-kernel when cols > rows.
  return Subspace{t.cols(), sd.v.rightCols(t.cols() - rank)};
}

// Orthonormal basis of the column space.
inline Subspace range_space(const ComplexMatrix& t) {
  if (t.size() == 0) throw std::invalid_argument("range_space: empty matrix");
  const SvdDecomposition sd = svd(t);
  const double tau = detail::rank_tol(sd.singular_values, t.rows(), t.cols());
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sd.singular_values.size(); ++i)
    if (sd.singular_values(i) > tau) ++rank;
  return Subspace{t.rows(), sd.u.leftCols(rank)};
}

inline Subspace Subspace::from_span(const ComplexMatrix& span) {
  if (span.cols() == 0) return Subspace::zero(span.rows());
  return range_space(span);
}

inline ComplexMatrix projector(const Subspace& s) {
  if (s.dim() == 0) return ComplexMatrix::Zero(s.ambient_dim, s.ambient_dim);
  return s.basis * s.basis.adjoint();
}

inline void check_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim != b.ambient_dim)
    throw std::invalid_argument("subspace: ambient dimension mismatch");
}

inline Subspace sum(const Subspace& s1, const Subspace& s2) {
  check_same_ambient(s1, s2);
  if (s1.dim() == 0) return s2;
  if (s2.dim() == 0) return s1;
  ComplexMatrix stacked(s1.ambient_dim, s1.dim() + s2.dim());
  stacked << s1.basis, s2.basis;
  return range_space(stacked);
}

// Intersection via the joint null space of (I - P1) and (I - P2). The
// stacked matrix lives on the unit scale of projectors, so the cutoff gets
// an absolute floor: a relative one misfires when both subspaces are
// (numerically) the whole space and the stack is pure rounding noise.
inline Subspace intersect(const Subspace& s1, const Subspace& s2) {
  check_same_ambient(s1, s2);
  const Eigen::Index n = s1.ambient_dim;
  if (s1.dim() == 0 || s2.dim() == 0) return Subspace::zero(n);
  ComplexMatrix stacked(2 * n, n);
  stacked.topRows(n) = ComplexMatrix::Identity(n, n) - projector(s1);
  stacked.bottomRows(n) = ComplexMatrix::Identity(n, n) - projector(s2);
  const SvdDecomposition sd = svd(stacked);
  const double tau =
      std::max(detail::rank_tol(sd.singular_values, 2 * n, n), 1e-8);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sd.singular_values.size(); ++i)
    if (sd.singular_values(i) > tau) ++rank;
  return Subspace{n, sd.v.rightCols(n - rank)};
}

inline Subspace complement(const Subspace& s) {
  if (s.dim() == 0) return Subspace::full(s.ambient_dim);
  return null_space(projector(s));
}

// inf{ ||x - y|| : x in S1, y in S2, unit } = sqrt(2 - 2 cos(theta_min)),
// with cos(theta_min) the largest singular value of basis1^dagger basis2,
// clamped at 1 so overlapping subspaces give exactly 0.
inline double angle(const Subspace& s1, const Subspace& s2) {
  check_same_ambient(s1, s2);
  if (s1.dim() == 0 || s2.dim() == 0)
    throw std::invalid_argument("angle: undefined for the zero subspace");
  const ComplexMatrix overlap = s1.basis.adjoint() * s2.basis;
  Eigen::JacobiSVD<ComplexMatrix> sd(overlap);
  const double c = std::min(1.0, sd.singularValues()(0));
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * c));
}

inline bool contains(const Subspace& outer, const Subspace& inner) {
  check_same_ambient(outer, inner);
  if (inner.dim() == 0) return true;
  const ComplexMatrix residual =
      inner.basis - projector(outer) * inner.basis;
  return residual.norm() <= static_cast<double>(outer.ambient_dim) * 1e-9;
}

}  // namespace opfactor
