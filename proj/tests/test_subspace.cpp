#include "opfactor/subspace.hpp"
#include "opfactor/verify.hpp"

#include <doctest.h>

using namespace opfactor;

namespace {
ComplexMatrix nilpotent2() {
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(0, 1) = Complex(1, 0);
  return a;
}
Subspace span_e(Eigen::Index n, std::initializer_list<Eigen::Index> idx) {
  ComplexMatrix b(n, static_cast<Eigen::Index>(idx.size()));
  Eigen::Index c = 0;
  for (Eigen::Index i : idx) b.col(c++) = ComplexVector::Unit(n, i);
  return Subspace{n, b};
}
}  // namespace

TEST_CASE("null_space examples") {
  CHECK(null_space(ComplexMatrix::Zero(2, 2)).dim() == 2);
  const Subspace n1 = null_space(nilpotent2());
  CHECK(n1.dim() == 1);
  CHECK(std::abs(std::abs(n1.basis(0, 0)) - 1.0) < 1e-12);  // span{e1}
  CHECK(null_space(ComplexMatrix(nilpotent2() * nilpotent2())).dim() == 2);
}

TEST_CASE("range_space examples") {
  CHECK(range_space(ComplexMatrix::Identity(3, 3)).dim() == 3);
  const Subspace r = range_space(nilpotent2());
  CHECK(r.dim() == 1);
  CHECK(std::abs(std::abs(r.basis(0, 0)) - 1.0) < 1e-12);
}

TEST_CASE("projector") {
  CHECK(projector(Subspace::zero(3)).norm() == 0.0);
  const ComplexMatrix p = projector(span_e(2, {0}));
  CHECK(std::abs(p(0, 0) - Complex(1, 0)) < 1e-14);
  CHECK(std::abs(p(1, 1)) < 1e-14);
  Rng rng(23);
  const Subspace s = Subspace::from_span(rng.matrix(5, 2));
  const ComplexMatrix ps = projector(s);
  CHECK((ps * ps - ps).norm() < 1e-10);
  CHECK((ps - ps.adjoint()).norm() < 1e-10);
}

TEST_CASE("lattice operations on coordinate spans") {
  const Subspace s = sum(span_e(3, {0}), span_e(3, {1}));
  CHECK(s.dim() == 2);
  const Subspace i = intersect(span_e(3, {0, 1}), span_e(3, {1, 2}));
  CHECK(i.dim() == 1);
  CHECK(std::abs(std::abs(i.basis(1, 0)) - 1.0) < 1e-10);
  CHECK(complement(span_e(3, {0})).dim() == 2);
}

TEST_CASE("angle") {
  CHECK(angle(span_e(2, {0}), span_e(2, {1})) == doctest::Approx(std::sqrt(2.0)));
  const Subspace s = span_e(3, {0, 1});
  CHECK(angle(s, s) == doctest::Approx(0.0));
  ComplexMatrix diag_line(2, 1);
  diag_line << Complex(1 / std::sqrt(2.0), 0), Complex(1 / std::sqrt(2.0), 0);
  // Brute-force oracle over both unit circles gives sqrt(2 - sqrt(2)).
  double brute = 1e9;
  for (int i = 0; i < 5000; ++i)
    for (int sign = -1; sign <= 1; sign += 2) {
      const double phi = 2 * 3.14159265358979323846 * i / 5000.0;
      ComplexVector x(2), y(2);
      x << std::polar(1.0, phi), 0.0;
      y = Complex(sign, 0) * diag_line.col(0);
      brute = std::min(brute, (x - y).norm());
    }
  const double a = angle(span_e(2, {0}), Subspace{2, diag_line});
  CHECK(a == doctest::Approx(std::sqrt(2.0 - std::sqrt(2.0))).epsilon(1e-6));
  CHECK(a == doctest::Approx(brute).epsilon(1e-3));
  CHECK_THROWS_AS(angle(Subspace::zero(2), span_e(2, {0})), std::invalid_argument);
}

TEST_CASE("contains") {
  Rng rng(29);
  const Subspace s1 = Subspace::from_span(rng.matrix(5, 2));
  const Subspace s2 = Subspace::from_span(rng.matrix(5, 2));
  CHECK(contains(Subspace::full(5), s1));
  CHECK_FALSE(contains(span_e(2, {0}), span_e(2, {1})));
  CHECK(contains(sum(s1, s2), s1));
}

TEST_CASE("ambient mismatch rejected") {
  CHECK_THROWS_AS(sum(span_e(2, {0}), span_e(3, {0})), std::invalid_argument);
}

TEST_CASE("subspace property suites") {
  CHECK(suites::subspace_angle_disjointness(6, 100).passed);
  CHECK(suites::subspace_grassmann(7, 200).passed);
  CHECK(suites::subspace_rank_nullity(8, 100).passed);
}
