// Seeded property suites behind `verify-all` and the acceptance run.
// Every suite is deterministic for a fixed seed; random inputs come from a
// raw mt19937_64 stream mapped to doubles by hand so the byte stream does
// not depend on the standard library's distribution implementations.

#pragma once

#include "opfactor/discrete.hpp"
#include "opfactor/json_io.hpp"

#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace opfactor {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double symmetric() { return 2.0 * uniform() - 1.0; }
  Complex complex_unit_box() { return Complex(symmetric(), symmetric()); }
  std::uint64_t integer(std::uint64_t bound) { return eng_() % bound; }

  ComplexMatrix matrix(Eigen::Index rows, Eigen::Index cols) {
    ComplexMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = complex_unit_box();
    return m;
  }

  ComplexMatrix unitary(Eigen::Index n) {
    return householder_qr(matrix(n, n)).first;
  }

  ComplexMatrix hermitian(Eigen::Index n) {
    const ComplexMatrix m = matrix(n, n);
    return 0.5 * (m + m.adjoint());
  }

  // Well-conditioned similarity for non-normal constructions.
  ComplexMatrix similarity(Eigen::Index n) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      ComplexMatrix s = matrix(n, n);
      Eigen::JacobiSVD<ComplexMatrix> sd(s);
      const RealVector& sig = sd.singularValues();
      if (sig(n - 1) > 0.15 * sig(0)) return s;
    }
    return ComplexMatrix::Identity(n, n);
  }

  // Projection of the given rank, random orientation.
  ComplexMatrix projection(Eigen::Index n, Eigen::Index rank) {
    const ComplexMatrix u = unitary(n);
    const ComplexMatrix cols = u.leftCols(rank);
    return cols * cols.adjoint();
  }

 private:
  std::mt19937_64 eng_;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  int trials = 0;
  std::string detail;
};

namespace suites {

inline void fail(SuiteResult& r, const std::string& why) {
  r.passed = false;
  if (r.detail.empty()) r.detail = why;
}

// ---- numkernel -----------------------------------------------------------

inline SuiteResult qr_reconstruction(std::uint64_t seed, int trials) {
  SuiteResult r{"qr-reconstruction"};
  Rng rng(seed);
  for (int t = 0; t < trials; ++t, ++r.trials) {
    const Eigen::Index rows = 2 + static_cast<Eigen::Index>(rng.integer(7));
    const Eigen::Index cols = 1 + static_cast<Eigen::Index>(rng.integer(rows));
    const ComplexMatrix m = rng.matrix(rows, cols);
    const auto [q, rr] = householder_qr(m);
    const double dim = static_cast<double>(std::max(rows, cols));
    if ((m - q * rr).norm() > dim * 1e-12 * std::max(1.0, m.norm()))
      fail(r, "reconstruction residual too large");
    if ((q.adjoint() * q - ComplexMatrix::Identity(cols, cols)).norm() > dim * 1e-12)
      fail(r, "Q columns not orthonormal");
    for (Eigen::Index j = 0; j < cols; ++j)
      if (rr(j, j).imag() != 0.0 || rr(j, j).real() < 0.0)
        fail(r, "R diagonal not real non-negative");
  }
  return r;
}

inline SuiteResult hermitian_eig_residuals(std::uint64_t seed, int trials) {
  SuiteResult r{"hermitian-eig"};
  Rng rng(seed);
  for (int t = 0; t < trials; ++t, ++r.trials) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.integer(31));
    const ComplexMatrix h = rng.hermitian(n);
    const EigenDecomposition ed = hermitian_eig(h);
    const double dim = static_cast<double>(n);
    if ((ed.vectors.adjoint() * ed.vectors - ComplexMatrix::Identity(n, n)).norm() > dim * 1e-12)
      fail(r, "eigenvectors not unitary");
    const ComplexMatrix resid =
        h * ed.vectors - ed.vectors * ed.eigenvalues.cast<Complex>().asDiagonal();
    if (resid.norm() > dim * 1e-10 * std::max(1.0, h.norm())) fail(r, "eigenpair residual");
    for (Eigen::Index i = 1; i < n; ++i)
      if (ed.eigenvalues(i) < ed.eigenvalues(i - 1)) fail(r, "eigenvalues not ascending");
    if (std::abs(ed.eigenvalues.sum() - h.trace().real()) > 1e-10 * std::max(1.0, h.norm()))
      fail(r, "trace mismatch");
  }
  return r;
}

inline SuiteResult svd_invariance(std::uint64_t seed, int trials) {
  SuiteResult r{"svd-invariance"};
  Rng rng(seed);
  for (int t = 0; t < trials; ++t, ++r.trials) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.integer(5));
    const ComplexMatrix m = rng.matrix(n, n);
    const SvdDecomposition sd = svd(m);
    double frob2 = 0;
    for (Eigen::Index i = 0; i < n; ++i) frob2 += sd.singular_values(i) * sd.singular_values(i);
    if (std::abs(frob2 - m.squaredNorm()) > 1e-10 * std::max(1.0, m.squaredNorm()))
      fail(r, "Frobenius/Parseval mismatch");
    const SvdDecomposition rotated =
        svd(ComplexMatrix(rng.unitary(n) * m * rng.unitary(n)));
    if ((rotated.singular_values - sd.singular_values).cwiseAbs().maxCoeff() > 1e-10)
      fail(r, "singular values not unitarily invariant");
  }
  return r;
}

inline SuiteResult exp_group_law(std::uint64_t seed, int trials) {
  SuiteResult r{"unitary-exp-group-law"};
  Rng rng(seed);
  for (int t = 0; t < trials; ++t, ++r.trials) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.integer(5));
    const ComplexMatrix h = rng.hermitian(n);
    const double s = rng.symmetric(), u = rng.symmetric();
    const ComplexMatrix lhs = unitary_exponential(h, s) * unitary_exponential(h, u);
    if ((lhs - unitary_exponential(h, s + u)).norm() > 1e-9) fail(r, "group law");
    const ComplexMatrix at_zero = unitary_exponential(h, 0.0);
    if ((at_zero - ComplexMatrix::Identity(n, n)).norm() > 1e-12) fail(r, "exp(0) != I");
    const ComplexMatrix ut = unitary_exponential(h, s);
    if ((ut.adjoint() * ut - ComplexMatrix::Identity(n, n)).norm() > 1e-10 * n)
      fail(r, "not unitary");
  }
  return r;
}

inline SuiteResult fft_roundtrip(std::uint64_t seed, int trials) {
  SuiteResult r{"fft-roundtrip-parseval"};
  Rng rng(seed);
  for (int t = 0; t < trials; ++t, ++r.trials) {
    const Eigen::Index n = Eigen::Index(1) << (1 + rng.integer(10));  // 2..1024
    ComplexVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.complex_unit_box();
    const ComplexVector hat = fft(v);
    if ((ifft(hat) - v).norm() > 1e-12 * std::max(1.0, v.norm())) fail(r, "round trip");
    if (std::abs(hat.squaredNorm() - static_cast<double>(n) * v.squaredNorm()) >
        1e-10 * static_cast<double>(n) * std::max(1.0, v.squaredNorm()))
      fail(r, "Parseval");
  }
  return r;
}

// ---- subspace ------------------------------------------------------------

inline SuiteResult subspace_angle_disjointness(std::uint64_t seed, int trials) {
  SuiteResult r{"angle-iff-disjoint"};
  Rng rng(seed);
  for (int t = 0; t < trials; ++t, ++r.trials) {
    const Eigen::Index n = 4 + static_cast<Eigen::Index>(rng.integer(3));
    const ComplexMatrix u = rng.unitary(n);
    // Disjoint pair from disjoint column groups, overlapping pair shares col 0.
    const Subspace s1 = Subspace::from_span(u.leftCols(2));
    const Subspace s2_disjoint = Subspace::from_span(u.middleCols(2, 2));
    ComplexMatrix overlap_span(n, 2);
    overlap_span << u.col(0), u.col(3);
    const Subspace s2_overlap = Subspace::from_span(overlap_span);
    if (!(angle(s1, s2_disjoint) > 1e-6)) fail(r, "disjoint pair has zero angle");
    if (intersect(s1, s2_disjoint).dim() != 0) fail(r, "disjoint pair intersects");
    if (angle(s1, s2_overlap) > 1e-6) fail(r, "overlapping pair has positive angle");
    if (intersect(s1, s2_overlap).dim() == 0) fail(r, "overlap not detected");
    if (std::abs(angle(s1, s2_disjoint) - angle(s2_disjoint, s1)) > 1e-12)
      fail(r, "angle not symmetric");
  }
  return r;
}

inline SuiteResult subspace_grassmann(std::uint64_t seed, int trials) {
  SuiteResult r{"grassmann-dimension-count"};
  Rng rng(seed);
  for (int t = 0; t < trials; ++t, ++r.trials) {
    const Eigen::Index n = 4 + static_cast<Eigen::Index>(rng.integer(4));
    // Share a controlled number of frame columns so intersections are exact.
    const ComplexMatrix u = rng.unitary(n);
    const Eigen::Index shared = static_cast<Eigen::Index>(rng.integer(2));
    const Eigen::Index k1 = shared + 1 + static_cast<Eigen::Index>(rng.integer(2));
    const Eigen::Index k2 = shared + 1;
    ComplexMatrix b1 = u.leftCols(k1);
    ComplexMatrix b2(n, k2);
    b2.leftCols(shared) = u.leftCols(shared);
    b2.rightCols(k2 - shared) = u.rightCols(k2 - shared);
    const Subspace s1 = Subspace::from_span(b1);
    const Subspace s2 = Subspace::from_span(b2);
    if (s1.dim() + s2.dim() != sum(s1, s2).dim() + intersect(s1, s2).dim())
      fail(r, "Grassmann identity");
    if (!contains(sum(s1, s2), s1)) fail(r, "sum does not contain summand");
    const ComplexMatrix p = projector(s1);
    const ComplexMatrix pc = projector(complement(s1));
    if ((p + pc - ComplexMatrix::Identity(n, n)).norm() > 1e-10)
      fail(r, "complement projector");
  }
  return r;
}

inline SuiteResult subspace_rank_nullity(std::uint64_t seed, int trials) {
  SuiteResult r{"rank-nullity-subspaces"};
  Rng rng(seed);
  for (int t = 0; t < trials; ++t, ++r.trials) {
    const Eigen::Index rows = 2 + static_cast<Eigen::Index>(rng.integer(5));
    const Eigen::Index cols = 2 + static_cast<Eigen::Index>(rng.integer(5));
    const Eigen::Index rank = static_cast<Eigen::Index>(rng.integer(std::min(rows, cols) + 1));
    const ComplexMatrix m = rank == 0
        ? ComplexMatrix(ComplexMatrix::Zero(rows, cols))
        : ComplexMatrix(rng.matrix(rows, rank) * rng.matrix(rank, cols));
    if (range_space(m).dim() != rank) fail(r, "range dimension != planted rank");
    if (null_space(m).dim() + range_space(m).dim() != cols) fail(r, "rank-nullity");
  }
  return r;
}

// ---- vnalg ---------------------------------------------------------------

inline ComplexMatrix random_block_element(Rng& rng, const BlockStructure& s,
                                          bool plant_deficiency) {
  ComplexMatrix m = ComplexMatrix::Zero(s.total(), s.total());
  for (std::size_t k = 0; k < s.block_count(); ++k) {
    const Eigen::Index nk = s.block_sizes[k];
    const Eigen::Index off = s.block_offset(k);
    Eigen::Index rank = nk;
    if (plant_deficiency) rank = static_cast<Eigen::Index>(rng.integer(nk + 1));
    m.block(off, off, nk, nk) = rank == 0
        ? ComplexMatrix(ComplexMatrix::Zero(nk, nk))
        : ComplexMatrix(rng.matrix(nk, rank) * rng.matrix(rank, nk));
  }
  return m;
}

inline ComplexMatrix random_block_projection(Rng& rng, const BlockStructure& s) {
  ComplexMatrix m = ComplexMatrix::Zero(s.total(), s.total());
  for (std::size_t k = 0; k < s.block_count(); ++k) {
    const Eigen::Index nk = s.block_sizes[k];
    const Eigen::Index off = s.block_offset(k);
    m.block(off, off, nk, nk) = rng.projection(nk, rng.integer(nk + 1));
  }
  return m;
}

inline std::vector<BlockStructure> standard_structures() {
  return {BlockStructure{{5}}, BlockStructure{{2, 3}}, BlockStructure{{1, 2, 4}}};
}

inline SuiteResult vnalg_rank_nullity(std::uint64_t seed, int trials) {
  SuiteResult r{"thm-rank-nullity-dimension"};
  Rng rng(seed);
  for (const BlockStructure& s : standard_structures()) {
    for (int t = 0; t < trials; ++t, ++r.trials) {
      const AlgebraElement el(s, random_block_element(rng, s, true));
      const RankNullityReport rep = rank_nullity_check(el);
      if (!rep.identity_holds) fail(r, "Dim(range)+Dim(null) != I");
    }
  }
  return r;
}

inline SuiteResult vnalg_dimension_inequality(std::uint64_t seed, int trials) {
  SuiteResult r{"dimension-inequality"};
  Rng rng(seed);
  const BlockStructure s{{2, 3}};
  for (int t = 0; t < trials; ++t, ++r.trials) {
    const AlgebraElement tt(s, random_block_element(rng, s, true));
    const AlgebraElement e(s, random_block_projection(rng, s));
    // F := projector(range(TE)) satisfies FTE = TE by construction.
    const AlgebraElement te(s, ComplexMatrix(tt.matrix * e.matrix));
    const AlgebraElement f = range_projection(te);
    const DimensionInequalityReport rep = dimension_inequality_check(tt, e, f);
    if (rep.hypothesis_residual >= 1e-9) fail(r, "FTE=TE residual too large");
    if (!rep.inequality_holds) fail(r, "inequality violated");
    if (rep.special_case_applies && !rep.special_case_holds) fail(r, "special case violated");
  }
  return r;
}

inline SuiteResult vnalg_lattice_identity(std::uint64_t seed, int trials) {
  SuiteResult r{"lattice-dimension-identity"};
  Rng rng(seed);
  const BlockStructure s{{2, 3}};
  for (int t = 0; t < trials; ++t, ++r.trials) {
    const AlgebraElement e(s, random_block_projection(rng, s));
    const AlgebraElement f(s, random_block_projection(rng, s));
    if (!lattice_dimension_identity(e, f).identity_holds) fail(r, "lattice identity");
  }
  return r;
}

inline SuiteResult vnalg_trace_property(std::uint64_t seed, int trials) {
  SuiteResult r{"trace-property"};
  Rng rng(seed);
  const BlockStructure s{{2, 3}};
  for (int t = 0; t < trials; ++t, ++r.trials) {
    const AlgebraElement a(s, random_block_element(rng, s, false));
    const AlgebraElement b(s, random_block_element(rng, s, false));
    const auto tau_ab = trace(AlgebraElement(s, ComplexMatrix(a.matrix * b.matrix)));
    const auto tau_ba = trace(AlgebraElement(s, ComplexMatrix(b.matrix * a.matrix)));
    for (std::size_t k = 0; k < tau_ab.size(); ++k)
      if (std::abs(tau_ab[k] - tau_ba[k]) > 1e-10 * (1.0 + std::abs(tau_ab[k])))
        fail(r, "trace not tracial");
    // Dimension of a projection equals its normalized trace.
    const AlgebraElement e(s, random_block_projection(rng, s));
    const auto tau_e = trace(e);
    const CenterValuedDimension dim_e = dimension(e);
    for (std::size_t k = 0; k < tau_e.size(); ++k)
      if (std::abs(tau_e[k].real() - dim_e[k].to_double()) > 1e-9)
        fail(r, "dimension != normalized trace");
  }
  return r;
}

// ---- operato -------------------------------------------------------------

inline SuiteResult polar_uniqueness(std::uint64_t seed, int trials) {
  SuiteResult r{"polar-decomposition"};
  Rng rng(seed);
  for (int t = 0; t < trials; ++t, ++r.trials) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.integer(5));
    ComplexMatrix m = rng.matrix(n, n);
    if (t % 3 == 0) m.col(0) = m.col(n - 1);  // exercise rank deficiency
    const PolarDecomposition pd = polar(m);
    if ((pd.partial_isometry * pd.positive_part - m).norm() > 1e-9 * std::max(1.0, m.norm()))
      fail(r, "T != VH");
    // Independent route to H: square root through the Gram eigenproblem.
    const EigenDecomposition ed = hermitian_eig(ComplexMatrix(m.adjoint() * m));
    ComplexVector sqrt_ev(n);
    for (Eigen::Index i = 0; i < n; ++i)
      sqrt_ev(i) = Complex(std::sqrt(std::max(0.0, ed.eigenvalues(i))), 0);
    const ComplexMatrix h_ref = ed.vectors * sqrt_ev.asDiagonal() * ed.vectors.adjoint();
    if ((pd.positive_part - h_ref).norm() > 1e-8 * std::max(1.0, m.norm()))
      fail(r, "H != sqrt(T*T)");
    // V*V is the projector onto range(H).
    const ComplexMatrix support = projector(range_space(pd.positive_part));
    if ((pd.partial_isometry.adjoint() * pd.partial_isometry - support).norm() > 1e-8)
      fail(r, "V*V != support projection");
  }
  return r;
}

inline SuiteResult spectral_resolution_properties(std::uint64_t seed, int trials) {
  SuiteResult r{"spectral-resolution"};
  Rng rng(seed);
  for (int t = 0; t < trials; ++t, ++r.trials) {
    const Eigen::Index n = 3 + static_cast<Eigen::Index>(rng.integer(4));
    // Plant a double eigenvalue.
    RealVector ev(n);
    for (Eigen::Index i = 0; i < n; ++i) ev(i) = 3.0 * rng.symmetric();
    ev(1) = ev(0);
    const ComplexMatrix u = rng.unitary(n);
    const ComplexMatrix h = u * ev.cast<Complex>().asDiagonal() * u.adjoint();
    const SpectralResolution sr = spectral_resolution(h, 1e-6);
    ComplexMatrix total = ComplexMatrix::Zero(n, n);
    ComplexMatrix recon = ComplexMatrix::Zero(n, n);
    for (std::size_t j = 0; j < sr.projections.size(); ++j) {
      total += sr.projections[j];
      recon += Complex(sr.eigenvalues[j], 0) * sr.projections[j];
      for (std::size_t l = 0; l < sr.projections.size(); ++l) {
        const ComplexMatrix prod = sr.projections[j] * sr.projections[l];
        const ComplexMatrix expect = (j == l) ? sr.projections[j] : ComplexMatrix(ComplexMatrix::Zero(n, n));
        if ((prod - expect).norm() > 1e-9) fail(r, "projections not orthogonal idempotents");
      }
    }
    if ((total - ComplexMatrix::Identity(n, n)).norm() > 1e-9) fail(r, "projections don't sum to I");
    if ((recon - h).norm() > 1e-7 * std::max(1.0, h.norm())) fail(r, "spectral reconstruction");
    // Distinct planted values minus the merged double eigenvalue.
    std::vector<double> sorted(ev.data(), ev.data() + n);
    std::sort(sorted.begin(), sorted.end());
    std::size_t expected = 1;
    for (Eigen::Index i = 1; i < n; ++i)
      if (sorted[static_cast<std::size_t>(i)] - sorted[static_cast<std::size_t>(i) - 1] > 1e-6)
        ++expected;
    if (sr.projections.size() != expected) fail(r, "cluster count != planted spectrum");
  }
  return r;
}

inline SuiteResult stability_biconditional(std::uint64_t seed, int trials) {
  SuiteResult r{"proper-stability-biconditional"};
  Rng rng(seed);
  for (int t = 0; t < trials; ++t, ++r.trials) {
    const Eigen::Index n = 4;
    const Eigen::Index k = 2;
    const ComplexMatrix u = rng.unitary(n);
    ComplexMatrix c_block = rng.matrix(n, n);
    const int kind = t % 3;
    if (kind == 0) {
      // Block diagonal: commutes with E.
      c_block.topRightCorner(k, n - k).setZero();
      c_block.bottomLeftCorner(n - k, k).setZero();
    } else if (kind == 1) {
      // Block upper triangular: stable under C only.
      c_block.bottomLeftCorner(n - k, k).setZero();
    }
    ComplexMatrix e_block = ComplexMatrix::Zero(n, n);
    e_block.topLeftCorner(k, k) = ComplexMatrix::Identity(k, k);
    const ComplexMatrix c = u * c_block * u.adjoint();
    const ComplexMatrix e = u * e_block * u.adjoint();
    const StabilityReport rep = proper_stability(c, e);
    if (rep.commutes != (rep.stable_under_c && rep.stable_under_c_adjoint))
      fail(r, "biconditional violated");
    if (kind == 0 && !rep.commutes) fail(r, "commuting case not detected");
    if (kind == 1 && (!rep.stable_under_c || rep.stable_under_c_adjoint))
      fail(r, "one-sided case misclassified");
  }
  return r;
}

inline SuiteResult adjoint_transfer(std::uint64_t seed, int trials) {
  SuiteResult r{"adjoint-commute-transfer"};
  Rng rng(seed);
  for (int t = 0; t < trials; ++t, ++r.trials) {
    const Eigen::Index n = 3 + static_cast<Eigen::Index>(rng.integer(3));
    const ComplexMatrix b = rng.hermitian(n);
    // C as a complex polynomial of B commutes with B.
    const Complex c0 = rng.complex_unit_box(), c1 = rng.complex_unit_box(),
                  c2 = rng.complex_unit_box();
    const ComplexMatrix c =
        c0 * ComplexMatrix::Identity(n, n) + c1 * b + c2 * b * b;
    const AdjointTransferReport rep = adjoint_commute_transfer(b, c);
    if (!rep.commutes) fail(r, "constructed pair does not commute");
    if (rep.residual_bc_adjoint > 1e-8) fail(r, "adjoint transfer residual too large");
    if (!rep.transfer_holds) fail(r, "transfer violated");
  }
  return r;
}

inline SuiteResult spectral_commute_equivalence(std::uint64_t seed, int trials) {
  SuiteResult r{"spectral-commute-equivalence"};
  Rng rng(seed);
  for (int t = 0; t < trials; ++t, ++r.trials) {
    const Eigen::Index n = 3 + static_cast<Eigen::Index>(rng.integer(3));
    ComplexMatrix h, k;
    if (t % 2 == 0) {
      // Common eigenbasis, repeated values included so clusters appear.
      const ComplexMatrix u = rng.unitary(n);
      RealVector d1(n), d2(n);
      for (Eigen::Index i = 0; i < n; ++i) {
        d1(i) = static_cast<double>(rng.integer(3));
        d2(i) = static_cast<double>(rng.integer(3));
      }
      h = u * d1.cast<Complex>().asDiagonal() * u.adjoint();
      k = u * d2.cast<Complex>().asDiagonal() * u.adjoint();
    } else {
      h = rng.hermitian(n);
      k = rng.hermitian(n);
    }
    const SpectralCommuteReport rep = spectral_commute(h, k);
    if (!rep.equivalence_holds) fail(r, "product/pairwise equivalence violated");
    if (t % 2 == 0 && !rep.product_equal) fail(r, "constructed commuting pair misread");
  }
  return r;
}

// ---- factorsolve ---------------------------------------------------------

// Diagonalizable matrix with planted eigenvalues, through a well-conditioned
// (generally non-unitary) similarity.
struct PlantedPair {
  ComplexMatrix a, b;
  Eigen::Index null_a = 0, null_b = 0, shared = 0;
};

inline PlantedPair planted_commuting_pair(Rng& rng, bool disjoint) {
  const Eigen::Index n = 5;
  const ComplexMatrix s = rng.similarity(n);
  const ComplexMatrix s_inv = s.inverse();
  RealVector ev(n);
  for (Eigen::Index i = 0; i < n; ++i) ev(i) = static_cast<double>(i + 1);
  const ComplexMatrix x = s * ev.cast<Complex>().asDiagonal() * s_inv;
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  PlantedPair p;
  if (disjoint) {
    // A kills eigenvalue 1, B kills eigenvalue 2.
    p.a = x - 1.0 * id;
    p.b = x - 2.0 * id;
    p.null_a = p.null_b = 1;
  } else {
    // Shared factor (x - 1): both null spaces contain the same eigenvector.
    p.a = (x - 1.0 * id) * (x - 2.0 * id);
    p.b = (x - 1.0 * id) * (x - 3.0 * id);
    p.null_a = p.null_b = 2;
    p.shared = 1;
  }
  return p;
}

inline SuiteResult null_product_containment(std::uint64_t seed, int trials) {
  SuiteResult r{"null-product-containment"};
  Rng rng(seed);
  for (int t = 0; t < trials; ++t, ++r.trials) {
    const bool disjoint = (t % 2 == 0);
    const PlantedPair p = planted_commuting_pair(rng, disjoint);
    const NullDecomposition d = null_product_decompose(p.a, p.b);
    if (!d.containment_holds) fail(r, "containment violated");
    if (d.containment_residual > 1e-8) fail(r, "containment residual too large");
    if (disjoint) {
      if (!d.disjoint) fail(r, "planted disjoint pair not disjoint");
      if (d.n_ab.dim() != d.n_a.dim() + d.n_b.dim()) fail(r, "counting violated");
      if (!d.equality_holds) fail(r, "equality violated in the disjoint case");
      if (d.witness_residual < 0 || d.witness_residual > 1e-9)
        fail(r, "witness decomposition residual");
    }
  }
  return r;
}

inline SuiteResult null_product_jordan(std::uint64_t seed, int trials) {
  SuiteResult r{"null-product-jordan"};
  Rng rng(seed);
  for (int t = 0; t < trials; ++t, ++r.trials) {
    // Jordan-type non-normal factor: containment still holds, equality may not.
    const Eigen::Index n = 4;
    const ComplexMatrix s = rng.similarity(n);
    ComplexMatrix jordan = ComplexMatrix::Zero(n, n);
    jordan(0, 1) = Complex(1, 0);  // nilpotent block on the first two coordinates
    jordan(2, 2) = Complex(2, 0);
    jordan(3, 3) = Complex(3, 0);
    const ComplexMatrix x = s * jordan * s.inverse();
    const NullDecomposition d = null_product_decompose(x, x);
    if (!d.containment_holds) fail(r, "containment violated for Jordan pair");
    if (d.equality_holds) fail(r, "nilpotent growth missed");
    if (d.n_a.dim() != 1 || d.n_ab.dim() != 2) fail(r, "Jordan dims wrong");
  }
  return r;
}

inline SuiteResult hermitian_equality_nondisjoint(std::uint64_t seed, int trials) {
  SuiteResult r{"hermitian-equality-nondisjoint"};
  Rng rng(seed);
  for (int t = 0; t < trials; ++t, ++r.trials) {
    const Eigen::Index n = 5;
    const ComplexMatrix u = rng.unitary(n);
    RealVector da(n), db(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      da(i) = 1.0 + rng.uniform();
      db(i) = 1.0 + rng.uniform();
    }
    // Shared zero eigenvector at column 0; separate zeros at 1 and 2.
    da(0) = 0; db(0) = 0; da(1) = 0; db(2) = 0;
    const ComplexMatrix a = u * da.cast<Complex>().asDiagonal() * u.adjoint();
    const ComplexMatrix b = u * db.cast<Complex>().asDiagonal() * u.adjoint();
    const NullDecomposition d = null_product_decompose(a, b);
    if (d.disjoint) fail(r, "planted shared kernel missed");
    if (!d.equality_holds) fail(r, "Hermitian equality violated");
    if (d.containment_residual > 1e-8) fail(r, "containment residual too large");
    if (d.n_ab.dim() != 3) fail(r, "product null dimension wrong");
  }
  return r;
}

inline SuiteResult counting_random(std::uint64_t seed, int trials) {
  SuiteResult r{"counting-n-ab"};
  Rng rng(seed);
  for (int t = 0; t < trials; ++t, ++r.trials) {
    const PlantedPair p = planted_commuting_pair(rng, true);
    const CountingReport rep = counting_check(p.a, p.b);
    if (!rep.sum_equals) fail(r, "n_ab != n_a + n_b");
    if (rep.n_a != p.null_a || rep.n_b != p.null_b) fail(r, "planted null dims wrong");
  }
  return r;
}

inline SuiteResult prop31_block(std::uint64_t seed, int trials) {
  SuiteResult r{"prop31-reducing"};
  Rng rng(seed);
  for (int t = 0; t < trials; ++t, ++r.trials) {
    const Eigen::Index n = 5, k = 2;
    const ComplexMatrix u = rng.unitary(n);
    // A vanishes on the first k frame columns; B block diagonal w.r.t. the
    // same splitting, singular inside the second block.
    RealVector da(n);
    for (Eigen::Index i = 0; i < n; ++i) da(i) = i < k ? 0.0 : 1.0 + rng.uniform();
    const ComplexMatrix a = u * da.cast<Complex>().asDiagonal() * u.adjoint();
    ComplexMatrix b_block = ComplexMatrix::Zero(n, n);
    b_block.topLeftCorner(k, k) = rng.matrix(k, k);
    ComplexMatrix lower = rng.matrix(n - k, n - k);
    lower.col(0).setZero();  // makes B singular transversally to N(A)
    b_block.bottomRightCorner(n - k, n - k) = lower;
    const ComplexMatrix b = u * b_block * u.adjoint();
    const ReductionReport rep = prop31_check(a, b);
    if (!rep.conclusion_holds) fail(r, "N(AB) != N(A) + N(B)");
  }
  return r;
}

inline SuiteResult ode_solver_suite(std::uint64_t seed, int trials) {
  SuiteResult r{"ode-solver"};
  Rng rng(seed);
  const std::vector<double> samples = {-1.0, -0.5, 0.0, 0.5, 1.0};
  for (int t = 0; t < trials; ++t, ++r.trials) {
    // Random roots with a planted multiplicity up to 3.
    const int mult = 1 + static_cast<int>(rng.integer(3));
    const Complex repeated(rng.symmetric(), rng.symmetric());
    const Complex simple(2.0 + rng.uniform(), rng.symmetric());
    Polynomial p{{Complex(1, 0)}};
    auto mul_linear = [](const Polynomial& q, Complex root) {
      Polynomial out;
      out.coefficients.assign(q.coefficients.size() + 1, Complex(0, 0));
      for (std::size_t i = 0; i < q.coefficients.size(); ++i) {
        out.coefficients[i + 1] += q.coefficients[i];
        out.coefficients[i] -= root * q.coefficients[i];
      }
      return out;
    };
    for (int i = 0; i < mult; ++i) p = mul_linear(p, repeated);
    p = mul_linear(p, simple);
    const OdeSolutionBasis basis = solve_ode(p);
    if (static_cast<int>(basis.size()) != p.degree()) fail(r, "basis size != degree");
    if (ode_residual(basis, p, samples) > 1e-8) fail(r, "annihilation residual");
    // Linear independence via the generalized Wronskian at x = 0.
    const Eigen::Index deg = p.degree();
    ComplexMatrix w(deg, deg);
    for (Eigen::Index col = 0; col < deg; ++col) {
      std::vector<Complex> q(static_cast<std::size_t>(basis[col].power) + 1, Complex(0, 0));
      q[static_cast<std::size_t>(basis[col].power)] = Complex(1, 0);
      for (Eigen::Index row = 0; row < deg; ++row) {
        w(row, col) = q.empty() ? Complex(0, 0) : q[0];
        q = detail::differentiate_poly_exp(q, basis[col].root);
      }
    }
    if (std::abs(w.determinant()) < 1e-8) fail(r, "Wronskian vanishes");
  }
  return r;
}

// ---- discrete ------------------------------------------------------------

inline SuiteResult translation_group_law(std::uint64_t seed, int trials) {
  SuiteResult r{"translation-group-law"};
  Rng rng(seed);
  const PeriodicGrid grid(16, kTwoPi);
  for (int t = 0; t < trials; ++t, ++r.trials) {
    const double s = rng.symmetric(), u = rng.symmetric();
    ComplexVector f(grid.n);
    for (Eigen::Index i = 0; i < grid.n; ++i) f(i) = rng.complex_unit_box();
    const ComplexVector lhs =
        translation_group(grid, s).apply(translation_group(grid, u).apply(f));
    const ComplexVector rhs = translation_group(grid, s + u).apply(f);
    if ((lhs - rhs).norm() > 1e-9 * std::max(1.0, f.norm())) fail(r, "group law");
  }
  // Whole-spacing shift equals the index rotation.
  ComplexVector delta = ComplexVector::Zero(grid.n);
  delta(0) = Complex(1, 0);
  const ComplexVector shifted = translation_group(grid, grid.length / grid.n).apply(delta);
  ComplexVector expect = ComplexVector::Zero(grid.n);
  expect(grid.n - 1) = Complex(1, 0);  // f(x_j + h) samples the delta one slot earlier
  if ((shifted - expect).norm() > 1e-10) fail(r, "grid shift not exact");
  return r;
}

inline SuiteResult differentiation_properties(std::uint64_t /*seed*/, int /*trials*/) {
  SuiteResult r{"differentiation-operator"};
  const PeriodicGrid grid(16, kTwoPi);
  const GridOperator d = differentiation_operator(grid);
  const ComplexMatrix dense = d.densify();
  r.trials = 3;
  if ((dense + dense.adjoint()).norm() > 1e-10) fail(r, "not skew-Hermitian");
  // Exact Fourier mode: D e^{ix} = i e^{ix}.
  ComplexVector mode(grid.n);
  for (Eigen::Index j = 0; j < grid.n; ++j)
    mode(j) = std::exp(Complex(0, grid.point(j)));
  if ((d.apply(mode) - Complex(0, 1) * mode).norm() > 1e-10 * mode.norm())
    fail(r, "first Fourier mode wrong");
  // D^2 sin = -sin.
  ComplexVector s(grid.n);
  for (Eigen::Index j = 0; j < grid.n; ++j) s(j) = Complex(std::sin(grid.point(j)), 0);
  if ((d.apply(d.apply(s)) + s).norm() > 1e-9 * s.norm()) fail(r, "second derivative wrong");
  return r;
}

inline SuiteResult stone_convergence(std::uint64_t seed, int /*trials*/) {
  SuiteResult r{"stone-generator-slope"};
  Rng rng(seed);
  const PeriodicGrid grid(64, kTwoPi);
  ComplexVector hat = ComplexVector::Zero(grid.n);
  for (Eigen::Index k = 0; k <= grid.n / 4; ++k) {
    hat(k) = rng.complex_unit_box();
    if (k > 0) hat(grid.n - k) = rng.complex_unit_box();
  }
  const ComplexVector f = ifft(hat);
  const ConvergenceReport rep =
      stone_generator_check(grid, f, {1e-1, 1e-2, 1e-3, 1e-4});
  r.trials = static_cast<int>(rep.errors.size());
  if (rep.fitted_slope < 0.9 || rep.fitted_slope > 1.1) {
    std::ostringstream os;
    os << "slope " << rep.fitted_slope << " outside [0.9, 1.1]";
    fail(r, os.str());
  }
  return r;
}

inline SuiteResult factored_demo_suite(std::uint64_t /*seed*/, int /*trials*/) {
  SuiteResult r{"factored-ode-demo"};
  const PeriodicGrid grid(8, kTwoPi);
  r.trials = 3;
  const NullDecomposition distinct = factored_ode_demo(grid, 1, 2);
  if (distinct.n_a.dim() != 1 || distinct.n_b.dim() != 1 || distinct.n_ab.dim() != 2 ||
      !distinct.equality_holds || !distinct.disjoint)
    fail(r, "distinct-frequency dims wrong");
  const NullDecomposition repeated = factored_ode_demo(grid, 1, 1);
  if (repeated.n_a.dim() != 1 || repeated.n_ab.dim() != 1)
    fail(r, "normal operator shows Jordan growth");
  const NullDecomposition constants = factored_ode_demo(grid, 0, 0);
  if (constants.n_ab.dim() != 1) fail(r, "constants kernel wrong");
  return r;
}

inline SuiteResult wave_demo_suite(std::uint64_t /*seed*/, int /*trials*/) {
  SuiteResult r{"wave-factorization-demo"};
  r.trials = 2;
  for (Eigen::Index n : {Eigen::Index(4), Eigen::Index(8)}) {
    const PeriodicGrid gx(n, kTwoPi), gy(4, kTwoPi);
    const WaveFactorizationReport rep = wave_factorization_demo(gx, gy);
    // Oracle: Fourier modes with k_x * k_y = 0 number n + m - 1.
    if (rep.dim_n_a != gy.n || rep.dim_n_b != gx.n) fail(r, "factor null dims wrong");
    if (rep.dim_n_ab != gx.n + gy.n - 1) fail(r, "product null dim != mode count");
    if (rep.dim_intersection != 1) fail(r, "constants intersection wrong");
    if (!rep.equality_holds) fail(r, "sum != product null space");
    if (rep.witness_residual > 1e-9) fail(r, "constant witness residual");
  }
  return r;
}

}  // namespace suites

inline std::vector<SuiteResult> run_all_suites(std::uint64_t seed, int trials) {
  using Suite = std::function<SuiteResult(std::uint64_t, int)>;
  const std::vector<std::pair<Suite, std::uint64_t>> table = {
      {suites::qr_reconstruction, 1}, {suites::hermitian_eig_residuals, 2},
      {suites::svd_invariance, 3}, {suites::exp_group_law, 4},
      {suites::fft_roundtrip, 5}, {suites::subspace_angle_disjointness, 6},
      {suites::subspace_grassmann, 7}, {suites::subspace_rank_nullity, 8},
      {suites::vnalg_rank_nullity, 9}, {suites::vnalg_dimension_inequality, 10},
      {suites::vnalg_lattice_identity, 11}, {suites::vnalg_trace_property, 12},
      {suites::polar_uniqueness, 13}, {suites::spectral_resolution_properties, 14},
      {suites::stability_biconditional, 15}, {suites::adjoint_transfer, 16},
      {suites::spectral_commute_equivalence, 17}, {suites::null_product_containment, 18},
      {suites::null_product_jordan, 19}, {suites::hermitian_equality_nondisjoint, 20},
      {suites::counting_random, 21}, {suites::prop31_block, 22},
      {suites::ode_solver_suite, 23}, {suites::translation_group_law, 24},
      {suites::differentiation_properties, 25}, {suites::stone_convergence, 26},
      {suites::factored_demo_suite, 27}, {suites::wave_demo_suite, 28},
  };
  std::vector<SuiteResult> out;
  for (const auto& [suite, salt] : table)
    out.push_back(suite(seed ^ (salt * 0x9e3779b97f4a7c15ULL), trials));
  return out;
}

}  // namespace opfactor
