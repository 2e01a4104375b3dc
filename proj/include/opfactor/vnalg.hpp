// Finite von Neumann algebras as direct sums of full matrix algebras, with
// the center-valued dimension function on projections. Murray-von Neumann
// equivalence reduces to blockwise rank equality in this setting, so the
// dimension of a projection is rank/block-size per block, held exactly.

#pragma once

#include "opfactor/rational.hpp"
#include "opfactor/subspace.hpp"

#include <vector>

namespace opfactor {

struct BlockStructure {
  std::vector<Eigen::Index> block_sizes;

  Eigen::Index total() const {
    Eigen::Index n = 0;
    for (auto b : block_sizes) n += b;
    return n;
  }
  std::size_t block_count() const { return block_sizes.size(); }
  Eigen::Index block_offset(std::size_t k) const {
    Eigen::Index off = 0;
    for (std::size_t i = 0; i < k; ++i) off += block_sizes[i];
    return off;
  }
  friend bool operator==(const BlockStructure& a, const BlockStructure& b) {
    return a.block_sizes == b.block_sizes;
  }
};

// One rational per block, each in [0, 1].
using CenterValuedDimension = std::vector<Rational>;

struct AlgebraElement {
  BlockStructure structure;
  ComplexMatrix matrix;  // block-diagonal per structure

  AlgebraElement(BlockStructure s, ComplexMatrix m)
      : structure(std::move(s)), matrix(std::move(m)) {
    const Eigen::Index n = structure.total();
    if (matrix.rows() != n || matrix.cols() != n)
      throw std::invalid_argument("AlgebraElement: matrix does not match structure");
    require_finite(matrix, "AlgebraElement");
    // Off-block entries must vanish.
    for (std::size_t k = 0; k < structure.block_count(); ++k) {
      const Eigen::Index off = structure.block_offset(k);
      const Eigen::Index nk = structure.block_sizes[k];
      for (Eigen::Index i = off; i < off + nk; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
          if ((j < off || j >= off + nk) && matrix(i, j) != Complex(0, 0))
            throw std::invalid_argument("AlgebraElement: nonzero off-block entry");
    }
  }

  ComplexMatrix block(std::size_t k) const {
    const Eigen::Index off = structure.block_offset(k);
    const Eigen::Index nk = structure.block_sizes[k];
    return matrix.block(off, off, nk, nk);
  }
};

inline bool is_projection(const ComplexMatrix& e, double tol = 1e-9) {
  if (e.rows() != e.cols()) return false;
  return (e * e - e).norm() <= tol && (e - e.adjoint()).norm() <= tol;
}

// Center-valued dimension of a projection: rank/n per block, exact.
inline CenterValuedDimension dimension(const AlgebraElement& e, double rank_tol = 1e-9) {
  if (!is_projection(e.matrix))
    throw std::invalid_argument("dimension: input is not a projection");
  CenterValuedDimension out;
  for (std::size_t k = 0; k < e.structure.block_count(); ++k) {
    const Eigen::Index nk = e.structure.block_sizes[k];
    out.emplace_back(numeric_rank(e.block(k), rank_tol), nk);
  }
  return out;
}

namespace detail {
inline AlgebraElement blockwise_projector(
    const BlockStructure& s,
    const std::vector<Subspace>& per_block) {
  ComplexMatrix m = ComplexMatrix::Zero(s.total(), s.total());
  for (std::size_t k = 0; k < s.block_count(); ++k) {
    const Eigen::Index off = s.block_offset(k);
    const Eigen::Index nk = s.block_sizes[k];
    m.block(off, off, nk, nk) = projector(per_block[k]);
  }
  return AlgebraElement(s, std::move(m));
}
}  // namespace detail

inline void check_same_structure(const AlgebraElement& a, const AlgebraElement& b) {
  if (!(a.structure == b.structure))
    throw std::invalid_argument("vnalg: block structure mismatch");
}

inline AlgebraElement meet(const AlgebraElement& e, const AlgebraElement& f) {
  check_same_structure(e, f);
  std::vector<Subspace> blocks;
  for (std::size_t k = 0; k < e.structure.block_count(); ++k)
    blocks.push_back(intersect(range_space(e.block(k)), range_space(f.block(k))));
  return detail::blockwise_projector(e.structure, blocks);
}

inline AlgebraElement join(const AlgebraElement& e, const AlgebraElement& f) {
  check_same_structure(e, f);
  std::vector<Subspace> blocks;
  for (std::size_t k = 0; k < e.structure.block_count(); ++k)
    blocks.push_back(sum(range_space(e.block(k)), range_space(f.block(k))));
  return detail::blockwise_projector(e.structure, blocks);
}

inline AlgebraElement null_projection(const AlgebraElement& t) {
  std::vector<Subspace> blocks;
  for (std::size_t k = 0; k < t.structure.block_count(); ++k)
    blocks.push_back(null_space(t.block(k)));
  return detail::blockwise_projector(t.structure, blocks);
}

inline AlgebraElement range_projection(const AlgebraElement& t) {
  std::vector<Subspace> blocks;
  for (std::size_t k = 0; k < t.structure.block_count(); ++k)
    blocks.push_back(range_space(t.block(k)));
  return detail::blockwise_projector(t.structure, blocks);
}

struct RankNullityReport {
  CenterValuedDimension delta_range;
  CenterValuedDimension delta_null;
  bool identity_holds = false;
};

// Dim(range) + Dim(null) = (1,...,1), exactly.
inline RankNullityReport rank_nullity_check(const AlgebraElement& t) {
  RankNullityReport rep;
  rep.delta_range = dimension(range_projection(t));
  rep.delta_null = dimension(null_projection(t));
  rep.identity_holds = true;
  for (std::size_t k = 0; k < rep.delta_range.size(); ++k)
    if (rep.delta_range[k] + rep.delta_null[k] != Rational(1))
      rep.identity_holds = false;
  return rep;
}

struct DimensionInequalityReport {
  CenterValuedDimension delta_e;
  CenterValuedDimension delta_meet;  // Dim(N(T) ^ E)
  CenterValuedDimension delta_f;
  double hypothesis_residual = 0.0;
  bool inequality_holds = false;
  bool special_case_applies = false;  // N(T) ^ E = 0
  bool special_case_holds = false;    // then Dim(E) <= Dim(F)
};

// Dim(E) - Dim(N(T) ^ E) <= Dim(F), requires FTE = TE.
inline DimensionInequalityReport dimension_inequality_check(
    const AlgebraElement& t, const AlgebraElement& e, const AlgebraElement& f) {
  check_same_structure(t, e);
  check_same_structure(t, f);
  if (!is_projection(e.matrix) || !is_projection(f.matrix))
    throw std::invalid_argument("dimension_inequality_check: E, F must be projections");
  DimensionInequalityReport rep;
  rep.hypothesis_residual = (f.matrix * t.matrix * e.matrix - t.matrix * e.matrix).norm();
  if (rep.hypothesis_residual > 1e-9)
    throw hypothesis_error("dimension_inequality_check: FTE = TE violated");
  const AlgebraElement nt_meet_e = meet(null_projection(t), e);
  rep.delta_e = dimension(e);
  rep.delta_meet = dimension(nt_meet_e);
  rep.delta_f = dimension(f);
  rep.inequality_holds = true;
  rep.special_case_applies = true;
  rep.special_case_holds = true;
  for (std::size_t k = 0; k < rep.delta_e.size(); ++k) {
    if (!(rep.delta_e[k] - rep.delta_meet[k] <= rep.delta_f[k]))
      rep.inequality_holds = false;
    if (rep.delta_meet[k] != Rational(0)) rep.special_case_applies = false;
  }
  if (rep.special_case_applies)
    for (std::size_t k = 0; k < rep.delta_e.size(); ++k)
      if (!(rep.delta_e[k] <= rep.delta_f[k])) rep.special_case_holds = false;
  return rep;
}

struct LatticeDimensionReport {
  CenterValuedDimension delta_e, delta_f, delta_join, delta_meet;
  bool identity_holds = false;
};

// Dim(E) + Dim(F) = Dim(E v F) + Dim(E ^ F), exactly.
inline LatticeDimensionReport lattice_dimension_identity(
    const AlgebraElement& e, const AlgebraElement& f) {
  LatticeDimensionReport rep;
  rep.delta_e = dimension(e);
  rep.delta_f = dimension(f);
  rep.delta_join = dimension(join(e, f));
  rep.delta_meet = dimension(meet(e, f));
  rep.identity_holds = true;
  for (std::size_t k = 0; k < rep.delta_e.size(); ++k)
    if (rep.delta_e[k] + rep.delta_f[k] != rep.delta_join[k] + rep.delta_meet[k])
      rep.identity_holds = false;
  return rep;
}

// Normalized trace per block: tr(block)/n_k.
inline std::vector<Complex> trace(const AlgebraElement& a) {
  std::vector<Complex> out;
  for (std::size_t k = 0; k < a.structure.block_count(); ++k)
    out.push_back(a.block(k).trace() / Complex(static_cast<double>(a.structure.block_sizes[k]), 0));
  return out;
}

}  // namespace opfactor
