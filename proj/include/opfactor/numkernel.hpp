// Dense complex linear-algebra kernels shared by every other module.
// All operations are pure and deterministic for a fixed input.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <vector>

namespace opfactor {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Global residual tolerance. OPFACTOR_TOL overrides it for the whole run.
inline double default_tol() {
  static const double tol = [] {
    if (const char* s = std::getenv("OPFACTOR_TOL")) {
      char* end = nullptr;
      double v = std::strtod(s, &end);
      if (end != s && v > 0) return v;
    }
    return 1e-9;
  }();
  return tol;
}

// A theorem hypothesis failed on otherwise well-formed input (distinct from
// malformed input; the CLI reports it with its own exit code).
struct hypothesis_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite()) throw std::invalid_argument(std::string(what) + ": non-finite entries");
}

inline bool is_hermitian(const ComplexMatrix& h, double rel_tol = 1e-10) {
  if (h.rows() != h.cols()) return false;
  return (h - h.adjoint()).norm() <= rel_tol * std::max(1.0, h.norm());
}

struct EigenDecomposition {
  RealVector eigenvalues;   // ascending
  ComplexMatrix vectors;    // unitary, columns are eigenvectors
};

struct SvdDecomposition {
  ComplexMatrix u;
  RealVector singular_values;  // descending, >= 0
  ComplexMatrix v;             // M = u * diag(sigma) * v^dagger
};

// QR with the R diagonal made real non-negative (phases absorbed into Q).
inline std::pair<ComplexMatrix, ComplexMatrix> householder_qr(const ComplexMatrix& m) {
  if (m.size() == 0) throw std::invalid_argument("householder_qr: empty matrix");
  require_finite(m, "householder_qr");
  const Eigen::Index k = std::min(m.rows(), m.cols());
  Eigen::HouseholderQR<ComplexMatrix> qr(m);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(m.rows(), k);
  ComplexMatrix r = qr.matrixQR().topRows(k).template triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < k; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0) {
      const Complex phase = d / std::abs(d);
      r.row(j) *= std::conj(phase);
      q.col(j) *= phase;
    }
  }
  return {q, r};
}

// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
// Input is symmetrized internally; rejects matrices that are not Hermitian
// to working tolerance.
inline EigenDecomposition hermitian_eig(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("hermitian_eig: not square");
  require_finite(h, "hermitian_eig");
  if (!is_hermitian(h)) throw std::invalid_argument("hermitian_eig: input not Hermitian");
  const ComplexMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sym);
  if (es.info() != Eigen::Success) throw std::runtime_error("hermitian_eig: solver failed");
  EigenDecomposition out{es.eigenvalues(), es.eigenvectors()};
  // Fix each eigenvector's phase: first entry above threshold made real positive.
  for (Eigen::Index j = 0; j < out.vectors.cols(); ++j) {
    for (Eigen::Index i = 0; i < out.vectors.rows(); ++i) {
      const Complex e = out.vectors(i, j);
      if (std::abs(e) > 1e-12) {
        out.vectors.col(j) *= std::conj(e) / std::abs(e);
        break;
      }
    }
  }
  return out;
}

// SVD with singular values descending and each U column's leading nonzero
// entry phase-normalized to real positive.
inline SvdDecomposition svd(const ComplexMatrix& m) {
  if (m.size() == 0) throw std::invalid_argument("svd: empty matrix");
  require_finite(m, "svd");
  Eigen::JacobiSVD<ComplexMatrix> solver(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  SvdDecomposition out{solver.matrixU(), solver.singularValues(), solver.matrixV()};
  const Eigen::Index k = std::min(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < k; ++j) {
    for (Eigen::Index i = 0; i < out.u.rows(); ++i) {
      const Complex e = out.u(i, j);
      if (std::abs(e) > 1e-12) {
        const Complex phase = std::conj(e) / std::abs(e);
        out.u.col(j) *= phase;
        out.v.col(j) *= phase;
        break;
      }
    }
  }
  return out;
}

inline int numeric_rank(const ComplexMatrix& m, double tol = -1.0) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> solver(m);
  const RealVector& sigma = solver.singularValues();
  if (sigma.size() == 0 || sigma(0) == 0.0) return 0;
  const double tau = tol >= 0
      ? tol
      : static_cast<double>(std::max(m.rows(), m.cols())) *
            std::numeric_limits<double>::epsilon() * sigma(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) > tau) ++rank;
  return rank;
}

// exp(i t H) for Hermitian H, via the eigendecomposition.
inline ComplexMatrix unitary_exponential(const ComplexMatrix& h, double t) {
  const EigenDecomposition ed = hermitian_eig(h);
  const Eigen::Index n = h.rows();
  ComplexVector phases(n);
  for (Eigen::Index j = 0; j < n; ++j)
    phases(j) = std::exp(Complex(0.0, t * ed.eigenvalues(j)));
  return ed.vectors * phases.asDiagonal() * ed.vectors.adjoint();
}

namespace detail {
inline void fft_radix2(std::vector<Complex>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("fft: length must be a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  const double pi = 3.14159265358979323846;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = 2.0 * pi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
    const Complex wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      Complex w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const Complex u = a[i + j];
        const Complex v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (inverse)
    for (auto& x : a) x /= static_cast<double>(n);
}
}  // namespace detail

// Unnormalized forward transform; ifft is the exact inverse.
inline ComplexVector fft(const ComplexVector& v) {
  std::vector<Complex> a(v.data(), v.data() + v.size());
  detail::fft_radix2(a, false);
  return Eigen::Map<const ComplexVector>(a.data(), static_cast<Eigen::Index>(a.size()));
}

inline ComplexVector ifft(const ComplexVector& v) {
  std::vector<Complex> a(v.data(), v.data() + v.size());
  detail::fft_radix2(a, true);
  return Eigen::Map<const ComplexVector>(a.data(), static_cast<Eigen::Index>(a.size()));
}

}  // namespace opfactor
