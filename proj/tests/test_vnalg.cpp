#include "opfactor/vnalg.hpp"
#include "opfactor/verify.hpp"

#include <doctest.h>

using namespace opfactor;

namespace {
const BlockStructure kM23{{2, 3}};

AlgebraElement diag_element(const BlockStructure& s, std::initializer_list<double> diag) {
  ComplexMatrix m = ComplexMatrix::Zero(s.total(), s.total());
  Eigen::Index i = 0;
  for (double d : diag) m(i, i) = Complex(d, 0), ++i;
  return AlgebraElement(s, m);
}
}  // namespace

TEST_CASE("dimension of identity and a planted rank pattern") {
  const AlgebraElement id(kM23, ComplexMatrix::Identity(5, 5));
  const CenterValuedDimension d = dimension(id);
  CHECK(d[0] == Rational(1));
  CHECK(d[1] == Rational(1));

  const CenterValuedDimension d2 = dimension(diag_element(kM23, {1, 0, 1, 1, 0}));
  CHECK(d2[0] == Rational(1, 2));
  CHECK(d2[1] == Rational(2, 3));

  Rng rng(31);
  const AlgebraElement planted(kM23, suites::random_block_projection(rng, kM23));
  const CenterValuedDimension d3 = dimension(planted);
  CHECK(d3[0].den <= 2);
  CHECK(d3[1].den <= 3);
}

TEST_CASE("dimension rejects non-projections") {
  Rng rng(37);
  const AlgebraElement generic(kM23, suites::random_block_element(rng, kM23, false));
  CHECK_THROWS_AS(dimension(generic), std::invalid_argument);
}

TEST_CASE("meet and join lattice units") {
  Rng rng(41);
  const AlgebraElement e(kM23, suites::random_block_projection(rng, kM23));
  const AlgebraElement id(kM23, ComplexMatrix::Identity(5, 5));
  const AlgebraElement zero(kM23, ComplexMatrix::Zero(5, 5));
  CHECK((meet(e, id).matrix - e.matrix).norm() < 1e-9);
  CHECK((join(e, zero).matrix - e.matrix).norm() < 1e-9);

  const BlockStructure m2{{2}};
  const AlgebraElement p1 = diag_element(m2, {1, 0});
  const AlgebraElement p2 = diag_element(m2, {0, 1});
  CHECK(meet(p1, p2).matrix.norm() < 1e-10);
  CHECK((join(p1, p2).matrix - ComplexMatrix::Identity(2, 2)).norm() < 1e-9);
}

TEST_CASE("meet of commuting projections is the product") {
  Rng rng(43);
  // Common eigenbasis makes E and F commute.
  const ComplexMatrix u2 = rng.unitary(2);
  const ComplexMatrix u3 = rng.unitary(3);
  ComplexMatrix m = ComplexMatrix::Zero(5, 5);
  m.topLeftCorner(2, 2) = u2.col(0) * u2.col(0).adjoint();
  ComplexMatrix f = ComplexMatrix::Zero(5, 5);
  f.topLeftCorner(2, 2) = u2.leftCols(2) * u2.leftCols(2).adjoint();
  f.bottomRightCorner(3, 3) = u3.col(1) * u3.col(1).adjoint();
  const AlgebraElement e_el(kM23, m), f_el(kM23, f);
  CHECK((meet(e_el, f_el).matrix - m * f).norm() < 1e-9);
}

TEST_CASE("rank_nullity_check exact identity") {
  const BlockStructure m2{{2}};
  const AlgebraElement zero(m2, ComplexMatrix::Zero(2, 2));
  const RankNullityReport r0 = rank_nullity_check(zero);
  CHECK(r0.delta_range[0] == Rational(0));
  CHECK(r0.delta_null[0] == Rational(1));
  CHECK(r0.identity_holds);

  ComplexMatrix nil = ComplexMatrix::Zero(2, 2);
  nil(0, 1) = Complex(1, 0);
  const RankNullityReport rn = rank_nullity_check(AlgebraElement(m2, nil));
  CHECK(rn.delta_range[0] == Rational(1, 2));
  CHECK(rn.delta_null[0] == Rational(1, 2));
  CHECK(rn.identity_holds);
}

TEST_CASE("dimension_inequality examples") {
  const BlockStructure m2{{2}};
  ComplexMatrix nil = ComplexMatrix::Zero(2, 2);
  nil(0, 1) = Complex(1, 0);
  const AlgebraElement t(m2, nil);
  const AlgebraElement id(m2, ComplexMatrix::Identity(2, 2));
  // E = F = I: Delta(range T) <= 1.
  const DimensionInequalityReport full = dimension_inequality_check(t, id, id);
  CHECK(full.inequality_holds);
  // E = I, F = projector on e1: equality 1 - 1/2 = 1/2.
  const AlgebraElement f(m2, [] {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = Complex(1, 0);
    return m;
  }());
  const DimensionInequalityReport eq = dimension_inequality_check(t, id, f);
  CHECK(eq.inequality_holds);
  CHECK(eq.delta_e[0] - eq.delta_meet[0] == Rational(1, 2));
  CHECK(eq.delta_f[0] == Rational(1, 2));
}

TEST_CASE("dimension_inequality rejects violated hypothesis") {
  const BlockStructure m2{{2}};
  ComplexMatrix nil = ComplexMatrix::Zero(2, 2);
  nil(0, 1) = Complex(1, 0);
  const AlgebraElement t(m2, nil);
  const AlgebraElement id(m2, ComplexMatrix::Identity(2, 2));
  const AlgebraElement wrong_f(m2, [] {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(1, 1) = Complex(1, 0);  // range(TE) = span e1, not below F
    return m;
  }());
  CHECK_THROWS_AS(dimension_inequality_check(t, id, wrong_f), hypothesis_error);
}

TEST_CASE("lattice identity trivial cases") {
  Rng rng(47);
  const AlgebraElement e(kM23, suites::random_block_projection(rng, kM23));
  CHECK(lattice_dimension_identity(e, e).identity_holds);
  const BlockStructure m2{{2}};
  const AlgebraElement p1 = diag_element(m2, {1, 0});
  const AlgebraElement p2 = diag_element(m2, {0, 1});
  const LatticeDimensionReport orth = lattice_dimension_identity(p1, p2);
  CHECK(orth.identity_holds);
  CHECK(orth.delta_meet[0] == Rational(0));
}

TEST_CASE("trace") {
  const AlgebraElement id(kM23, ComplexMatrix::Identity(5, 5));
  for (const Complex& tau : trace(id)) CHECK(std::abs(tau - Complex(1, 0)) < 1e-14);
  const BlockStructure m2{{2}};
  CHECK(std::abs(trace(diag_element(m2, {1, 0}))[0] - Complex(0.5, 0)) < 1e-14);
}

TEST_CASE("structure mismatch rejected") {
  Rng rng(53);
  const AlgebraElement e(kM23, suites::random_block_projection(rng, kM23));
  const BlockStructure other{{5}};
  const AlgebraElement f(other, rng.projection(5, 2));
  CHECK_THROWS_AS(meet(e, f), std::invalid_argument);
}

TEST_CASE("dimension additivity, faithfulness and monotonicity") {
  Rng rng(59);
  for (int t = 0; t < 25; ++t) {
    // Orthogonal split of a random frame: additive dimensions.
    const ComplexMatrix u2 = rng.unitary(2);
    const ComplexMatrix u3 = rng.unitary(3);
    ComplexMatrix e = ComplexMatrix::Zero(5, 5), f = ComplexMatrix::Zero(5, 5);
    e.topLeftCorner(2, 2) = u2.col(0) * u2.col(0).adjoint();
    f.topLeftCorner(2, 2) = u2.col(1) * u2.col(1).adjoint();
    f.bottomRightCorner(3, 3) = u3.col(0) * u3.col(0).adjoint();
    const AlgebraElement ee(kM23, e), ff(kM23, f);
    const AlgebraElement sum_ef(kM23, ComplexMatrix(e + f));
    const CenterValuedDimension de = dimension(ee), df = dimension(ff), ds = dimension(sum_ef);
    for (std::size_t k = 0; k < ds.size(); ++k) CHECK(ds[k] == de[k] + df[k]);
    // Monotone under range containment.
    const CenterValuedDimension dj = dimension(join(ee, ff));
    for (std::size_t k = 0; k < dj.size(); ++k) CHECK(de[k] <= dj[k]);
  }
  const AlgebraElement zero(kM23, ComplexMatrix::Zero(5, 5));
  for (const Rational& v : dimension(zero)) CHECK(v == Rational(0));
}

TEST_CASE("vnalg property suites") {
  CHECK(suites::vnalg_rank_nullity(9, 100).passed);
  CHECK(suites::vnalg_dimension_inequality(10, 100).passed);
  CHECK(suites::vnalg_lattice_identity(11, 100).passed);
  CHECK(suites::vnalg_trace_property(12, 100).passed);
}
