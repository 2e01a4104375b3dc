#include "opfactor/operato.hpp"
#include "opfactor/verify.hpp"

#include <doctest.h>

using namespace opfactor;

namespace {
ComplexMatrix nilpotent2() {
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(0, 1) = Complex(1, 0);
  return a;
}
}  // namespace

TEST_CASE("polar of a unitary") {
  Rng rng(61);
  const ComplexMatrix u = rng.unitary(4);
  const PolarDecomposition pd = polar(u);
  CHECK((pd.partial_isometry - u).norm() < 1e-9);
  CHECK((pd.positive_part - ComplexMatrix::Identity(4, 4)).norm() < 1e-9);
}

TEST_CASE("polar of the nilpotent matrix") {
  const PolarDecomposition pd = polar(nilpotent2());
  ComplexMatrix h_expect = ComplexMatrix::Zero(2, 2);
  h_expect(1, 1) = Complex(1, 0);
  CHECK((pd.positive_part - h_expect).norm() < 1e-12);
  // V = e1 e2^dagger up to a global phase fixed by the SVD convention.
  CHECK(std::abs(pd.partial_isometry(0, 1)) == doctest::Approx(1.0));
  CHECK((pd.partial_isometry * pd.positive_part - nilpotent2()).norm() < 1e-12);
}

TEST_CASE("polar of a random invertible matrix") {
  Rng rng(67);
  const ComplexMatrix t = rng.similarity(5);
  const PolarDecomposition pd = polar(t);
  CHECK((pd.partial_isometry.adjoint() * pd.partial_isometry -
         ComplexMatrix::Identity(5, 5)).norm() < 1e-8);
  CHECK((pd.partial_isometry * pd.positive_part - t).norm() < 1e-9 * t.norm());
}

TEST_CASE("spectral_resolution examples") {
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d(0, 0) = d(1, 1) = Complex(1, 0);
  d(2, 2) = Complex(2, 0);
  const SpectralResolution sr = spectral_resolution(d);
  REQUIRE(sr.eigenvalues.size() == 2);
  CHECK(sr.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(sr.eigenvalues[1] == doctest::Approx(2.0));
  CHECK(sr.projections[0](0, 0).real() == doctest::Approx(1.0));
  CHECK(sr.projections[0](2, 2).real() == doctest::Approx(0.0));
  CHECK(sr.projections[1](2, 2).real() == doctest::Approx(1.0));

  const SpectralResolution zero = spectral_resolution(ComplexMatrix::Zero(3, 3));
  REQUIRE(zero.eigenvalues.size() == 1);
  CHECK((zero.projections[0] - ComplexMatrix::Identity(3, 3)).norm() < 1e-12);
}

TEST_CASE("commute_check") {
  Rng rng(71);
  const ComplexMatrix a = rng.matrix(3, 3);
  CHECK(commute_check(a, ComplexMatrix(a * a)).commutes);
  ComplexMatrix lower = ComplexMatrix::Zero(2, 2);
  lower(1, 0) = Complex(1, 0);
  CHECK_FALSE(commute_check(nilpotent2(), lower).commutes);
  const ComplexMatrix u = rng.unitary(3);
  RealVector d1(3), d2(3);
  d1 << 1, 2, 3;
  d2 << -1, 5, 0;
  const ComplexMatrix h1 = u * d1.cast<Complex>().asDiagonal() * u.adjoint();
  const ComplexMatrix h2 = u * d2.cast<Complex>().asDiagonal() * u.adjoint();
  CHECK(commute_check(h1, h2).commutes);
}

TEST_CASE("spectral_commute 2x2 cases") {
  ComplexMatrix h = ComplexMatrix::Zero(2, 2);
  h(0, 0) = Complex(1, 0);
  h(1, 1) = Complex(2, 0);
  const SpectralCommuteReport same = spectral_commute(h, h);
  CHECK(same.product_equal);
  CHECK(same.all_pairwise);
  CHECK(same.equivalence_holds);

  ComplexMatrix pauli_x = ComplexMatrix::Zero(2, 2);
  pauli_x(0, 1) = pauli_x(1, 0) = Complex(1, 0);
  const SpectralCommuteReport mixed = spectral_commute(h, pauli_x);
  CHECK_FALSE(mixed.product_equal);
  CHECK_FALSE(mixed.all_pairwise);
  CHECK(mixed.equivalence_holds);
}

TEST_CASE("proper_stability truth patterns") {
  ComplexMatrix c = ComplexMatrix::Zero(2, 2);
  c(0, 0) = Complex(1, 0);
  c(1, 1) = Complex(2, 0);
  ComplexMatrix e = ComplexMatrix::Zero(2, 2);
  e(0, 0) = Complex(1, 0);
  const StabilityReport diag = proper_stability(c, e);
  CHECK(diag.stable_under_c);
  CHECK(diag.stable_under_c_adjoint);
  CHECK(diag.commutes);

  const StabilityReport nil = proper_stability(nilpotent2(), e);
  CHECK(nil.stable_under_c);
  CHECK_FALSE(nil.stable_under_c_adjoint);
  CHECK_FALSE(nil.commutes);

  CHECK_THROWS_AS(proper_stability(c, nilpotent2()), std::invalid_argument);
}

TEST_CASE("adjoint_commute_transfer diagonal cases") {
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  Rng rng(73);
  const AdjointTransferReport any = adjoint_commute_transfer(id, rng.matrix(2, 2));
  CHECK(any.commutes);
  CHECK(any.transfer_holds);

  ComplexMatrix b = ComplexMatrix::Zero(2, 2);
  b(0, 0) = Complex(1, 0);
  b(1, 1) = Complex(-1, 0);
  ComplexMatrix c = ComplexMatrix::Zero(2, 2);
  c(0, 0) = Complex(0, 1);
  c(1, 1) = Complex(2, 0);
  const AdjointTransferReport diag = adjoint_commute_transfer(b, c);
  CHECK(diag.commutes);
  CHECK(diag.residual_bc_adjoint < 1e-12);
  CHECK_THROWS_AS(adjoint_commute_transfer(nilpotent2(), c), std::invalid_argument);
}

TEST_CASE("operato property suites") {
  CHECK(suites::polar_uniqueness(13, 60).passed);
  CHECK(suites::spectral_resolution_properties(14, 60).passed);
  CHECK(suites::stability_biconditional(15, 300).passed);
  CHECK(suites::adjoint_transfer(16, 100).passed);
  CHECK(suites::spectral_commute_equivalence(17, 200).passed);
}
