#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "lsob/entropy.hpp"
#include "lsob/errors.hpp"
#include "lsob/sampler.hpp"

using namespace lsob;
using doctest::Approx;

namespace {

// Classical reference: sum p log(p/q) with 0 log 0 = 0.
double naive_kl(const std::vector<double>& p, const std::vector<double>& q) {
  double out = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] > 0) out += p[i] * std::log(p[i] / q[i]);
  return out;
}

double naive_binary(double x, double y) {
  double out = 0.0;
  if (x > 0) out += x * std::log(x / y);
  if (x < 1) out += (1 - x) * std::log((1 - x) / (1 - y));
  return out;
}

DensityMatrix diag(std::vector<double> p) { return DensityMatrix::diagonal(p); }

}  // namespace

TEST_SUITE("entropy") {

TEST_CASE("von Neumann entropy") {
  CHECK(von_neumann_entropy(diag({0.9, 0.1})) == Approx(0.325083).epsilon(1e-6));
  CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(5)) == Approx(std::log(5.0)));
  CHECK(von_neumann_entropy(diag({1.0, 0.0, 0.0})) == 0.0);
  const std::vector<double> p{0.2, 0.3, 0.5};
  CHECK(shannon_entropy(p) == Approx(-(0.2 * std::log(0.2) + 0.3 * std::log(0.3) + 0.5 * std::log(0.5))));
}

TEST_CASE("relative entropy of diagonal states") {
  const auto d = relative_entropy(diag({0.5, 0.5}), diag({0.9, 0.1}));
  REQUIRE(d.is_finite());
  CHECK(d.value() == Approx(0.510826).epsilon(1e-6));
  CHECK(d.value() == Approx(naive_kl({0.5, 0.5}, {0.9, 0.1})).epsilon(1e-14));

  const auto self = relative_entropy(diag({0.3, 0.7}), diag({0.3, 0.7}));
  CHECK(self.value() == Approx(0.0).epsilon(1e-15));

  CHECK(relative_entropy(diag({0.5, 0.5}), diag({1.0, 0.0})).is_infinite());
  // Support of rho inside support of sigma stays finite.
  const auto inside = relative_entropy(diag({1.0, 0.0}), diag({0.5, 0.5}));
  CHECK(inside.value() == Approx(std::log(2.0)));
}

TEST_CASE("relative entropy against a rotated reference") {
  // rho = |+><+| against sigma = diag(p, 1-p): D = -S(rho) - <+|log sigma|+>.
  ComplexVector plus(2);
  plus << 1.0, 1.0;
  const DensityMatrix rho = DensityMatrix::pure(plus);
  const double p = 0.8;
  const double expected = -0.5 * (std::log(p) + std::log(1 - p));
  CHECK(relative_entropy(rho, diag({p, 1 - p})).value() == Approx(expected).epsilon(1e-12));
}

TEST_CASE("integral representation matches the spectral formula") {
  Rng rng(21);
  for (int d : {2, 3, 4}) {
    const DensityMatrix rho = random_hilbert_schmidt(d, rng);
    const DensityMatrix sigma = random_hilbert_schmidt(d, rng);
    const double direct = relative_entropy(rho, sigma).value();
    CHECK(relative_entropy_integral(rho, sigma) == Approx(direct).epsilon(1e-6));
  }
  CHECK_THROWS_AS(relative_entropy_integral(diag({1.0, 0.0}), diag({0.5, 0.5})), PreconditionError);
}

TEST_CASE("binary relative entropy") {
  CHECK(binary_relative_entropy(0.5, 0.25) == Approx(0.143841).epsilon(1e-6));
  CHECK(binary_relative_entropy(0.5, 0.25) == Approx(naive_binary(0.5, 0.25)));
  CHECK(binary_relative_entropy(0.0, 0.3) == Approx(-std::log(0.7)));
  CHECK(binary_relative_entropy(1.0, 0.3) == Approx(-std::log(0.3)));
  CHECK(binary_relative_entropy(0.4, 0.4) == 0.0);
  // Near-equal arguments keep relative precision: D2 ~ (x-y)^2 / (2 y (1-y)).
  const double x = 0.3 + 1e-7, y = 0.3;
  CHECK(binary_relative_entropy(x, y) == Approx(1e-14 / (2 * 0.3 * 0.7)).epsilon(1e-5));
}

TEST_CASE("kl_term") {
  CHECK(kl_term(0.0, 0.4) == Approx(0.4));
  CHECK(kl_term(0.3, 0.3) == 0.0);
  CHECK(kl_term(0.5, 0.25) == Approx(0.5 * std::log(2.0) - 0.25));
  CHECK(kl_term(0.25 + 1e-9, 0.25) >= 0.0);
}

TEST_CASE("q_ratio") {
  const auto q = q_ratio(0.5, 0.1);
  REQUIRE(q.is_finite());
  // D2(0.1||0.5) = 0.368064, D2(0.5||0.1) = 0.510826.
  CHECK(q.value() == Approx(0.368064 / 0.510826).epsilon(1e-5));
  CHECK(q.value() == Approx(naive_binary(0.1, 0.5) / naive_binary(0.5, 0.1)));
  CHECK(q_ratio(0.3, 0.3).value() == 1.0);
  CHECK(q_ratio(0.0, 0.3).is_infinite());
  CHECK(q_ratio(1.0, 0.3).is_infinite());
}

TEST_CASE("Q_ratio") {
  const DensityMatrix sigma = diag({0.9, 0.1});
  const DensityMatrix rho = diag({0.5, 0.5});
  const auto q = Q_ratio(rho, sigma);
  CHECK(q.value() == Approx(naive_kl({0.9, 0.1}, {0.5, 0.5}) / naive_kl({0.5, 0.5}, {0.9, 0.1})));
  CHECK(Q_ratio(sigma, sigma).value() == 1.0);
  CHECK(Q_ratio(diag({1.0, 0.0}), sigma).is_infinite());
  CHECK_THROWS_AS(Q_ratio(rho, diag({1.0, 0.0})), PreconditionError);
}

TEST_CASE("entropy production") {
  const DensityMatrix sigma = diag({0.7, 0.3});
  const DensityMatrix rho = diag({0.4, 0.6});
  const double expected = naive_kl({0.4, 0.6}, {0.7, 0.3}) + naive_kl({0.7, 0.3}, {0.4, 0.6});
  CHECK(entropy_production_depolarizing(rho, sigma) == Approx(expected));
}

TEST_CASE("continuity scan tends to one") {
  const DensityMatrix sigma = diag({0.6, 0.4});
  const HermitianMatrix x = HermitianMatrix::diagonal(std::vector<double>{0.5, -0.5});
  const std::vector<double> eps{0.5, 1e-2, 1e-4, 2.0};
  const auto scan = continuity_ratio_scan(sigma, x, eps);
  REQUIRE(scan.size() == 4);
  CHECK(std::abs(scan[2].ratio->value() - 1.0) < 1e-3);
  CHECK(std::abs(scan[2].ratio->value() - 1.0) < std::abs(scan[1].ratio->value() - 1.0));
  // sigma + 2X has a negative eigenvalue.
  CHECK_FALSE(scan[3].ratio.has_value());

  const HermitianMatrix traced = HermitianMatrix::diagonal(std::vector<double>{0.5, 0.5});
  CHECK_THROWS_AS(continuity_ratio_scan(sigma, traced, eps), ArgumentError);
}

TEST_CASE("extended real ordering") {
  const auto inf = ExtendedReal::infinity();
  const auto one = ExtendedReal::finite(1.0);
  CHECK(one < inf);
  CHECK(inf == ExtendedReal::infinity());
  CHECK(inf.value_or(-1.0) == -1.0);
  CHECK_THROWS_AS(inf.value(), std::logic_error);
}

TEST_CASE("Klein and unitary invariance on random pairs") {
  Rng rng(99);
  for (int k = 0; k < 50; ++k) {
    const int d = 2 + static_cast<int>(rng.below(5));
    const DensityMatrix rho = random_hilbert_schmidt(d, rng);
    const DensityMatrix sigma = random_hilbert_schmidt(d, rng);
    const double dr = relative_entropy(rho, sigma).value();
    CHECK(dr >= -1e-12);
    const ComplexMatrix u = random_unitary_frame(d, rng);
    const DensityMatrix ur(ComplexMatrix(u * rho.matrix() * u.adjoint()));
    const DensityMatrix us(ComplexMatrix(u * sigma.matrix() * u.adjoint()));
    CHECK(relative_entropy(ur, us).value() == Approx(dr).epsilon(1e-9));
    CHECK(von_neumann_entropy(ur) == Approx(von_neumann_entropy(rho)).epsilon(1e-9));
  }
}

}
