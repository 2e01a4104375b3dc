#include "opfactor/numkernel.hpp"
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

TEST_CASE("householder_qr identity and unit column") {
  const ComplexMatrix id = ComplexMatrix::Identity(3, 3);
  const auto [q, r] = householder_qr(id);
  CHECK((q - id).norm() < 1e-14);
  CHECK((r - id).norm() < 1e-14);

  ComplexMatrix col(2, 1);
  col << Complex(0, 0), Complex(1, 0);
  const auto [q2, r2] = householder_qr(col);
  CHECK(std::abs(q2(1, 0) - Complex(1, 0)) < 1e-14);
  CHECK(std::abs(r2(0, 0) - Complex(1, 0)) < 1e-14);
}

TEST_CASE("householder_qr reconstruction on a random 5x3") {
  Rng rng(7);
  const ComplexMatrix m = rng.matrix(5, 3);
  const auto [q, r] = householder_qr(m);
  CHECK((m - q * r).norm() < 1e-12 * m.norm());
}

TEST_CASE("hermitian_eig small cases") {
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = Complex(2, 0);
  d(1, 1) = Complex(1, 0);
  const EigenDecomposition ed = hermitian_eig(d);
  CHECK(ed.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(ed.eigenvalues(1) == doctest::Approx(2.0));

  ComplexMatrix pauli_x = ComplexMatrix::Zero(2, 2);
  pauli_x(0, 1) = pauli_x(1, 0) = Complex(1, 0);
  const EigenDecomposition ex = hermitian_eig(pauli_x);
  CHECK(ex.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(ex.eigenvalues(1) == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eig trace oracle and rejection") {
  Rng rng(11);
  const ComplexMatrix h = rng.hermitian(6);
  const EigenDecomposition ed = hermitian_eig(h);
  CHECK(std::abs(ed.eigenvalues.sum() - h.trace().real()) < 1e-10);
  CHECK_THROWS_AS(hermitian_eig(nilpotent2()), std::invalid_argument);
}

TEST_CASE("svd examples") {
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = Complex(3, 0);
  const SvdDecomposition sd = svd(d);
  CHECK(sd.singular_values(0) == doctest::Approx(3.0));
  CHECK(sd.singular_values(1) == doctest::Approx(0.0));

  const SvdDecomposition sn = svd(nilpotent2());
  CHECK(sn.singular_values(0) == doctest::Approx(1.0));
  CHECK(sn.singular_values(1) == doctest::Approx(0.0));

  Rng rng(13);
  const ComplexMatrix m = rng.matrix(4, 4);
  const SvdDecomposition sm = svd(m);
  CHECK((m - sm.u * sm.singular_values.cast<Complex>().asDiagonal() * sm.v.adjoint()).norm() <
        4 * 1e-10 * m.norm());
  CHECK(std::abs(sm.singular_values.squaredNorm() - m.squaredNorm()) < 1e-10 * m.squaredNorm());
}

TEST_CASE("numeric_rank") {
  CHECK(numeric_rank(ComplexMatrix::Zero(3, 3)) == 0);
  CHECK(numeric_rank(nilpotent2()) == 1);
  Rng rng(17);
  const ComplexMatrix low = rng.matrix(5, 2) * rng.matrix(2, 5);
  CHECK(numeric_rank(low) == 2);
}

TEST_CASE("unitary_exponential") {
  Rng rng(19);
  const ComplexMatrix h = rng.hermitian(3);
  CHECK((unitary_exponential(h, 0.0) - ComplexMatrix::Identity(3, 3)).norm() < 1e-14);

  ComplexMatrix scalar(1, 1);
  scalar(0, 0) = Complex(3.14159265358979323846, 0);
  CHECK(std::abs(unitary_exponential(scalar, 1.0)(0, 0) - Complex(-1, 0)) < 1e-12);

  const double s = 0.7, t = -0.3;
  CHECK((unitary_exponential(h, s) * unitary_exponential(h, t) - unitary_exponential(h, s + t)).norm() < 1e-9);
  CHECK_THROWS_AS(unitary_exponential(nilpotent2(), 1.0), std::invalid_argument);
}

TEST_CASE("fft basics") {
  ComplexVector ones = ComplexVector::Constant(4, Complex(1, 0));
  const ComplexVector hat = fft(ones);
  CHECK(std::abs(hat(0) - Complex(4, 0)) < 1e-14);
  CHECK(hat.tail(3).norm() < 1e-14);

  ComplexVector delta = ComplexVector::Zero(4);
  delta(0) = Complex(1, 0);
  CHECK((fft(delta) - ComplexVector::Constant(4, Complex(1, 0))).norm() < 1e-14);

  CHECK_THROWS_AS(fft(ComplexVector::Zero(6)), std::invalid_argument);
}

TEST_CASE("kernel property suites") {
  CHECK(suites::qr_reconstruction(1, 50).passed);
  CHECK(suites::hermitian_eig_residuals(2, 100).passed);
  CHECK(suites::svd_invariance(3, 50).passed);
  CHECK(suites::exp_group_law(4, 30).passed);
  CHECK(suites::fft_roundtrip(5, 50).passed);
}
