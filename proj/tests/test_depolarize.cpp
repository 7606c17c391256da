#include <doctest.h>

#include <cmath>
#include <vector>

#include "lsob/depolarize.hpp"
#include "lsob/errors.hpp"
#include "lsob/sampler.hpp"

using namespace lsob;
using doctest::Approx;

namespace {

double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_SUITE("depolarize") {

TEST_CASE("single-site channel") {
  const DensityMatrix sigma = DensityMatrix::diagonal(std::vector<double>{0.7, 0.3});
  const DensityMatrix rho = DensityMatrix::diagonal(std::vector<double>{0.0, 1.0});

  CHECK(max_diff(semigroup_apply(sigma, 0.0, rho).matrix(), rho.matrix()) < 1e-15);
  // At t = ln 2 the output is the midpoint.
  const DensityMatrix half = semigroup_apply(sigma, std::log(2.0), rho);
  CHECK(half.matrix()(0, 0).real() == Approx(0.35));
  CHECK(half.matrix()(1, 1).real() == Approx(0.65));
  CHECK(max_diff(semigroup_apply(sigma, 60.0, rho).matrix(), sigma.matrix()) < 1e-15);
  CHECK_THROWS_AS(DepolarizingChannel(sigma, -0.1), ArgumentError);
}

TEST_CASE("semigroup law and fixed point") {
  Rng rng(4);
  const DensityMatrix sigma = random_hilbert_schmidt(3, rng);
  const DensityMatrix rho = random_hilbert_schmidt(3, rng);
  const DensityMatrix two_steps = semigroup_apply(sigma, 0.4, semigroup_apply(sigma, 0.9, rho));
  CHECK(max_diff(two_steps.matrix(), semigroup_apply(sigma, 1.3, rho).matrix()) < 1e-13);
  CHECK(max_diff(semigroup_apply(sigma, 0.7, sigma).matrix(), sigma.matrix()) < 1e-14);
}

TEST_CASE("liouvillian") {
  const DensityMatrix sigma = DensityMatrix::diagonal(std::vector<double>{0.7, 0.3});
  const DensityMatrix rho = DensityMatrix::diagonal(std::vector<double>{0.2, 0.8});
  const HermitianMatrix l = liouvillian_apply(sigma, rho);
  CHECK(l.matrix()(0, 0).real() == Approx(0.5));
  CHECK(l.matrix()(1, 1).real() == Approx(-0.5));
  CHECK(std::abs(l.trace()) < 1e-15);

  // Forward difference of T_t at t = 0 approaches L.
  const double h = 1e-7;
  const ComplexMatrix fd = (semigroup_apply(sigma, h, rho).matrix() - rho.matrix()) / h;
  CHECK(max_diff(fd, l.matrix()) < 1e-6);
}

TEST_CASE("tensor semigroup on product states") {
  Rng rng(8);
  const DensityMatrix sigma = random_hilbert_schmidt(2, rng);
  const DensityMatrix a = random_hilbert_schmidt(2, rng), b = random_hilbert_schmidt(2, rng);
  const DensityMatrix out = tensor_semigroup_apply(sigma, 0.6, 2, kron(a, b));
  const DensityMatrix expected = kron(semigroup_apply(sigma, 0.6, a), semigroup_apply(sigma, 0.6, b));
  CHECK(max_diff(out.matrix(), expected.matrix()) < 1e-14);
  CHECK(out.local_dims().size() == 2);
}

TEST_CASE("tensor semigroup on an entangled state") {
  // T^{(x)2} rho = e^{-2t} rho + e^{-t}(1-e^{-t}) (sigma (x) rho_B + rho_A (x) sigma)
  //               + (1-e^{-t})^2 sigma (x) sigma.
  ComplexVector psi = ComplexVector::Zero(4);
  psi(0) = psi(3) = 1.0;
  const DensityMatrix rho = DensityMatrix::pure(psi, {2, 2});
  const DensityMatrix sigma = DensityMatrix::diagonal(std::vector<double>{0.8, 0.2});
  const double t = 0.5, e = std::exp(-t);
  const DensityMatrix half = DensityMatrix::maximally_mixed(2);
  const ComplexMatrix expected = e * e * rho.matrix() +
                                 e * (1 - e) * (kron(sigma, half).matrix() + kron(half, sigma).matrix()) +
                                 (1 - e) * (1 - e) * kron(sigma, sigma).matrix();
  CHECK(max_diff(tensor_semigroup_apply(sigma, t, 2, rho).matrix(), expected) < 1e-14);

  CHECK_THROWS_AS(tensor_semigroup_apply(sigma, t, 3, rho), ArgumentError);
}

TEST_CASE("replace_site") {
  const DensityMatrix a = DensityMatrix::diagonal(std::vector<double>{1.0, 0.0});
  const DensityMatrix b = DensityMatrix::diagonal(std::vector<double>{0.25, 0.75});
  const DensityMatrix s = DensityMatrix::maximally_mixed(2);
  const std::vector<int> dims{2, 2};
  const ComplexMatrix out = replace_site(kron(a, b).matrix(), dims, 0, s.matrix());
  CHECK(max_diff(out, kron(s, b).matrix()) < 1e-15);
}

}
