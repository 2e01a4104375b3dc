// Operator decompositions and commutativity/stability checks in finite
// dimensions. Extension relations between unbounded operators collapse to
// plain equalities here, so every criterion is a residual bound.

#pragma once

#include "opfactor/numkernel.hpp"

#include <vector>

namespace opfactor {

struct PolarDecomposition {
  ComplexMatrix partial_isometry;  // V, isometric on range(H)
  ComplexMatrix positive_part;     // H = (T^dagger T)^(1/2)
};

// T = V H with V supported on range(H): V maps the first rank(T)
// right-singular directions to the matching left-singular directions and
// kills the rest.
inline PolarDecomposition polar(const ComplexMatrix& t) {
  if (t.rows() != t.cols()) throw std::invalid_argument("polar: square matrix required");
  const SvdDecomposition sd = svd(t);
  const int rank = numeric_rank(t);
  PolarDecomposition out;
  out.positive_part =
      sd.v * sd.singular_values.cast<Complex>().asDiagonal() * sd.v.adjoint();
  out.partial_isometry = sd.u.leftCols(rank) * sd.v.leftCols(rank).adjoint();
  return out;
}

struct SpectralResolution {
  std::vector<double> eigenvalues;          // cluster representatives, ascending
  std::vector<ComplexMatrix> projections;   // mutually orthogonal, sum to I
};

// Eigenvalues clustered greedily in ascending order; a new cluster starts
// when the gap to the previous eigenvalue exceeds gap_tol.
inline SpectralResolution spectral_resolution(const ComplexMatrix& h, double gap_tol = -1.0) {
  const EigenDecomposition ed = hermitian_eig(h);
  const Eigen::Index n = h.rows();
  if (gap_tol < 0) {
    const double spectral_norm =
        std::max(std::abs(ed.eigenvalues(0)), std::abs(ed.eigenvalues(n - 1)));
    gap_tol = 1e-8 * std::max(1.0, spectral_norm);
  }
  SpectralResolution out;
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i <= n; ++i) {
    if (i == n || ed.eigenvalues(i) - ed.eigenvalues(i - 1) > gap_tol) {
      const ComplexMatrix cluster = ed.vectors.middleCols(start, i - start);
      out.projections.push_back(cluster * cluster.adjoint());
      double mean = 0;
      for (Eigen::Index j = start; j < i; ++j) mean += ed.eigenvalues(j);
      out.eigenvalues.push_back(mean / static_cast<double>(i - start));
      start = i;
    }
  }
  return out;
}

struct CommuteResult {
  bool commutes = false;
  double residual = 0.0;
};

inline CommuteResult commute_check(const ComplexMatrix& a, const ComplexMatrix& b,
                                   double tol = 1e-9) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw std::invalid_argument("commute_check: equal square dimensions required");
  CommuteResult r;
  r.residual = (a * b - b * a).norm();
  r.commutes = r.residual <= tol * (1.0 + a.norm() * b.norm());
  return r;
}

struct SpectralCommuteReport {
  SpectralResolution res_h, res_k;
  std::vector<std::vector<bool>> pairwise;
  bool all_pairwise = false;
  bool product_equal = false;
  bool equivalence_holds = false;  // product_equal <=> all_pairwise
};

// HK = KH iff every pair of spectral projections commutes.
inline SpectralCommuteReport spectral_commute(const ComplexMatrix& h,
                                              const ComplexMatrix& k) {
  SpectralCommuteReport rep;
  rep.res_h = spectral_resolution(h);
  rep.res_k = spectral_resolution(k);
  rep.all_pairwise = true;
  for (const auto& p : rep.res_h.projections) {
    std::vector<bool> row;
    for (const auto& q : rep.res_k.projections) {
      const bool c = (p * q - q * p).norm() <= 1e-8;
      row.push_back(c);
      if (!c) rep.all_pairwise = false;
    }
    rep.pairwise.push_back(std::move(row));
  }
  rep.product_equal = commute_check(h, k).commutes;
  rep.equivalence_holds = rep.product_equal == rep.all_pairwise;
  return rep;
}

struct StabilityReport {
  bool stable_under_c = false;
  bool stable_under_c_adjoint = false;
  bool commutes = false;
  double residual_stability = 0.0;          // ||ECE - CE||
  double residual_adjoint_stability = 0.0;  // ||E C* E - C* E||
  double residual_commutator = 0.0;         // ||EC - CE||
};

// E(H) is properly stable under C iff CE = ECE; stability under both C and
// C* is equivalent to EC = CE.
inline StabilityReport proper_stability(const ComplexMatrix& c, const ComplexMatrix& e) {
  if (c.rows() != c.cols() || e.rows() != e.cols() || c.rows() != e.rows())
    throw std::invalid_argument("proper_stability: equal square dimensions required");
  if ((e * e - e).norm() > 1e-8 || (e - e.adjoint()).norm() > 1e-8)
    throw std::invalid_argument("proper_stability: E is not a projection");
  StabilityReport rep;
  const double scale = 1e-9 * (1.0 + c.norm());
  rep.residual_stability = (e * c * e - c * e).norm();
  rep.residual_adjoint_stability =
      (e * c.adjoint() * e - c.adjoint() * e).norm();
  rep.residual_commutator = (e * c - c * e).norm();
  rep.stable_under_c = rep.residual_stability <= scale;
  rep.stable_under_c_adjoint = rep.residual_adjoint_stability <= scale;
  rep.commutes = rep.residual_commutator <= scale;
  return rep;
}

struct AdjointTransferReport {
  double residual_bc = 0.0;         // ||BC - CB||
  double residual_bc_adjoint = 0.0; // ||B C* - C* B||
  bool commutes = false;
  bool transfer_holds = false;      // commutes => adjoint also commutes
};

// For Hermitian B: BC = CB implies B C* = C* B.
inline AdjointTransferReport adjoint_commute_transfer(const ComplexMatrix& b,
                                                      const ComplexMatrix& c) {
  if (!is_hermitian(b)) throw std::invalid_argument("adjoint_commute_transfer: B not Hermitian");
  AdjointTransferReport rep;
  const CommuteResult direct = commute_check(b, c);
  const CommuteResult adjoint = commute_check(b, ComplexMatrix(c.adjoint()));
  rep.residual_bc = direct.residual;
  rep.residual_bc_adjoint = adjoint.residual;
  rep.commutes = direct.commutes;
  rep.transfer_holds = !direct.commutes || adjoint.commutes;
  return rep;
}

}  // namespace opfactor
