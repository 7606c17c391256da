#include <doctest.h>

#include <cmath>
#include <vector>

#include "lsob/errors.hpp"
#include "lsob/matcore.hpp"
#include "lsob/sampler.hpp"

using namespace lsob;
using doctest::Approx;

namespace {

ComplexMatrix bell_pair() {
  ComplexVector psi = ComplexVector::Zero(4);
  psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
  return psi * psi.adjoint();
}

// Reference partial trace over the second factor by explicit index contraction.
ComplexMatrix trace_out_second(const ComplexMatrix& m, int da, int db) {
  ComplexMatrix out = ComplexMatrix::Zero(da, da);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      for (int k = 0; k < db; ++k) out(i, j) += m(i * db + k, j * db + k);
  return out;
}

}  // namespace

TEST_SUITE("matcore") {

TEST_CASE("eigh of a diagonal matrix keeps the standard basis") {
  const std::vector<double> d{0.3, 0.7};
  const auto e = eigh(HermitianMatrix::diagonal(d));
  CHECK(e.values(0) == Approx(0.3));
  CHECK(e.values(1) == Approx(0.7));
  CHECK(std::abs(e.vectors(0, 0)) == Approx(1.0));
  CHECK(std::abs(e.vectors(1, 1)) == Approx(1.0));
}

TEST_CASE("eigh of the swap matrix") {
  ComplexMatrix x(2, 2);
  x << 0, 1, 1, 0;
  const auto e = eigh(HermitianMatrix(x));
  CHECK(e.values(0) == Approx(-1.0));
  CHECK(e.values(1) == Approx(1.0));
  // Eigenvectors are (1, -1)/sqrt2 and (1, 1)/sqrt2 up to phase.
  CHECK(std::abs(e.vectors(0, 0)) == Approx(1 / std::sqrt(2.0)));
  CHECK(std::abs(e.vectors(0, 0) + e.vectors(1, 0)) == Approx(0.0).epsilon(1e-12));
  CHECK(std::abs(e.vectors(0, 1) - e.vectors(1, 1)) == Approx(0.0).epsilon(1e-12));
}

TEST_CASE("eigh reconstructs random Hermitian matrices") {
  Rng rng(11);
  for (int d : {2, 5, 17, 64}) {
    ComplexMatrix g(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) g(i, j) = rng.complex_normal();
    const HermitianMatrix h(ComplexMatrix(g + g.adjoint()));
    const auto e = eigh(h);
    const ComplexMatrix back = e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
    CHECK((back - h.matrix()).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((e.vectors.adjoint() * e.vectors - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-10);
    for (int i = 1; i < d; ++i) CHECK(e.values(i - 1) <= e.values(i));
  }
}

TEST_CASE("density matrix validation") {
  CHECK_THROWS_AS(DensityMatrix::diagonal(std::vector<double>{0.6, 0.6}), ArgumentError);
  CHECK_THROWS_AS(DensityMatrix::diagonal(std::vector<double>{1.2, -0.2}), ArgumentError);
  ComplexMatrix skew(2, 2);
  skew << 0.5, 0.1, 0.3, 0.5;
  CHECK_THROWS_AS(DensityMatrix{skew}, ArgumentError);

  // Tiny negative eigenvalues are round-off and get clamped.
  const DensityMatrix clamped = DensityMatrix::diagonal(std::vector<double>{1.0 + 5e-11, -5e-11});
  CHECK(clamped.min_eigenvalue() == 0.0);
}

TEST_CASE("spectrum is sorted descending and validated") {
  const Spectrum s(std::vector<double>{0.2, 0.5, 0.3});
  CHECK(s[0] == 0.5);
  CHECK(s[2] == 0.2);
  CHECK(s.min() == 0.2);
  CHECK_THROWS_AS(Spectrum(std::vector<double>{0.5, 0.6}), ArgumentError);
}

TEST_CASE("matrix_log") {
  const HermitianMatrix l = matrix_log(DensityMatrix::maximally_mixed(3));
  for (int i = 0; i < 3; ++i) CHECK(l.matrix()(i, i).real() == Approx(-std::log(3.0)));
  const HermitianMatrix m = matrix_log(DensityMatrix::diagonal(std::vector<double>{0.9, 0.1}));
  CHECK(m.matrix()(0, 0).real() == Approx(std::log(0.9)));
  CHECK(m.matrix()(1, 1).real() == Approx(std::log(0.1)));
  CHECK(std::abs(m.matrix()(0, 1)) < 1e-15);
}

TEST_CASE("partial trace") {
  Rng rng(3);
  const DensityMatrix a = random_hilbert_schmidt(2, rng);
  const DensityMatrix b = random_hilbert_schmidt(3, rng);
  const DensityMatrix ab = kron(a, b);
  const std::vector<int> first{0}, second{1}, both{0, 1}, none{};
  CHECK((partial_trace(ab, first).matrix() - a.matrix()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((partial_trace(ab, second).matrix() - b.matrix()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((partial_trace(ab, both).matrix() - ab.matrix()).cwiseAbs().maxCoeff() < 1e-15);
  const DensityMatrix scalar = partial_trace(ab, none);
  CHECK(scalar.dim() == 1);
  CHECK(scalar.matrix()(0, 0).real() == Approx(1.0));

  const DensityMatrix bell(bell_pair(), {2, 2});
  CHECK((partial_trace(bell, first).matrix() - ComplexMatrix::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() < 1e-15);

  const DensityMatrix mixed = random_hilbert_schmidt(6, rng).with_local_dims({2, 3});
  CHECK((partial_trace(mixed, first).matrix() - trace_out_second(mixed.matrix(), 2, 3)).cwiseAbs().maxCoeff() <
        1e-14);

  const std::vector<int> bad{2};
  CHECK_THROWS_AS(partial_trace(ab, bad), ArgumentError);
}

TEST_CASE("trace norm") {
  CHECK(trace_norm(HermitianMatrix::diagonal(std::vector<double>{0.5, -0.5})) == Approx(1.0));
  CHECK(trace_norm(HermitianMatrix::zero(3)) == 0.0);
  const DensityMatrix rho = DensityMatrix::diagonal(std::vector<double>{1.0, 0.0});
  CHECK(trace_norm(rho - DensityMatrix::maximally_mixed(2)) == Approx(1.0));

  Rng rng(5);
  for (int k = 0; k < 20; ++k) {
    const DensityMatrix x = random_hilbert_schmidt(4, rng), y = random_hilbert_schmidt(4, rng),
                        z = random_hilbert_schmidt(4, rng);
    CHECK(trace_norm(x - z) <= trace_norm(x - y) + trace_norm(y - z) + 1e-12);
  }
}

TEST_CASE("tensor power") {
  const DensityMatrix half = DensityMatrix::maximally_mixed(2);
  const DensityMatrix two = tensor_power(half, 2);
  CHECK((two.matrix() - ComplexMatrix::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(two.local_dims().size() == 2);

  const DensityMatrix s = DensityMatrix::diagonal(std::vector<double>{0.9, 0.1});
  CHECK((tensor_power(s, 1).matrix() - s.matrix()).cwiseAbs().maxCoeff() == 0.0);
  const DensityMatrix s2 = tensor_power(s, 2);
  const double expected[] = {0.81, 0.09, 0.09, 0.01};
  for (int i = 0; i < 4; ++i) CHECK(s2.matrix()(i, i).real() == Approx(expected[i]));

  CHECK_THROWS_AS(tensor_power(half, 13), ResourceError);
}

}
