#include <doctest.h>

#include <cmath>
#include <vector>

#include "lsob/entropy.hpp"
#include "lsob/errors.hpp"
#include "lsob/pinsker.hpp"
#include "lsob/sampler.hpp"

using namespace lsob;
using doctest::Approx;

namespace {

// Reference balance coefficient: enumerate all subsets with a bitmask.
double naive_pi(const std::vector<double>& p) {
  const int d = static_cast<int>(p.size());
  double best = 0.0;
  for (int mask = 1; mask < (1 << d) - 1; ++mask) {
    double w = 0.0;
    for (int i = 0; i < d; ++i)
      if (mask >> i & 1) w += p[i];
    best = std::max(best, std::min(w, 1 - w));
  }
  return best;
}

double naive_binary(double x, double y) {
  return x * std::log(x / y) + (1 - x) * std::log((1 - x) / (1 - y));
}

}  // namespace

TEST_SUITE("pinsker") {

TEST_CASE("phi") {
  CHECK(phi(1.0 / 3) == Approx(3 * std::log(2.0)));
  CHECK(phi(0.5) == 2.0);
  CHECK(phi(0.5 - 1e-9) == Approx(2.0).epsilon(1e-12));
  CHECK(phi(0.01) == Approx(std::log(99.0) / 0.98));
  double prev = phi(1e-4);
  for (double p : {0.01, 0.1, 0.3, 0.45, 0.5}) {
    CHECK(phi(p) < prev);
    prev = phi(p);
  }
  CHECK_THROWS_AS(phi(0.0), ArgumentError);
  CHECK_THROWS_AS(phi(0.6), ArgumentError);
}

TEST_CASE("balance coefficient") {
  CHECK(balance_pi(Spectrum({1.0 / 3, 1.0 / 3, 1.0 / 3})).pi == Approx(1.0 / 3));
  CHECK(balance_pi(Spectrum({0.5, 0.5})).pi == 0.5);
  const auto r = balance_pi(Spectrum({0.99, 0.0025, 0.0025, 0.0025, 0.0025}));
  CHECK(r.pi == Approx(0.01));
  // Smallest subset attaining the optimum is the largest eigenvalue alone.
  CHECK(r.subset == std::vector<int>{0});

  const auto literal = balance_pi(Spectrum({0.9, 0.1}), BalanceMethod::automatic, 1e-6, BalanceMode::literal);
  CHECK(literal.pi == 0.5);
}

TEST_CASE("dynamic program agrees with enumeration") {
  Rng rng(17);
  for (int k = 0; k < 20; ++k) {
    const int d = 2 + static_cast<int>(rng.below(9));
    const Spectrum s = random_spectrum(d, rng);
    const std::vector<double> p(s.values().begin(), s.values().end());
    const double expected = naive_pi(p);
    CHECK(balance_pi(s, BalanceMethod::exhaustive).pi == Approx(expected).epsilon(1e-14));
    CHECK(std::abs(balance_pi(s, BalanceMethod::dp).pi - expected) <= 2e-6 * d);
  }
}

TEST_CASE("pinsker report") {
  const auto r = pinsker_report(Spectrum({0.99, 0.0025, 0.0025, 0.0025, 0.0025}));
  CHECK(r.pi_sigma == Approx(0.01));
  CHECK(r.constant == Approx(phi(0.01) / 4).epsilon(1e-12));
  CHECK(r.constant == Approx(1.17222445).epsilon(1e-8));
  CHECK_THROWS_AS(improved_pinsker_constant(DensityMatrix::diagonal(std::vector<double>{1.0, 0.0})),
                  PreconditionError);
}

TEST_CASE("minimum relative entropy at a given distance") {
  const DensityMatrix half = DensityMatrix::maximally_mixed(2);
  const auto m = min_relent_at_distance(half, 0.5);
  CHECK(m.value.value() == Approx(0.130812).epsilon(1e-5));
  CHECK(m.value.value() == Approx(naive_binary(0.75, 0.5)));

  // Nothing is feasible once eps/2 pushes every block weight to 1.
  CHECK(min_relent_at_distance(half, 1.5).value.is_infinite());
}

TEST_CASE("two-block witness state") {
  const DensityMatrix sigma = DensityMatrix::diagonal(std::vector<double>{0.6, 0.3, 0.1});
  const std::vector<int> top{0};
  const DensityMatrix tau = two_block_state(sigma, top, 0.1);
  CHECK(trace_norm(tau - sigma) == Approx(0.2));
  CHECK(relative_entropy(tau, sigma).value() == Approx(naive_binary(0.7, 0.6)));
  CHECK(tau.matrix()(1, 1).real() == Approx(0.3 * 0.3 / 0.4));
}

TEST_CASE("tightness sequence") {
  const DensityMatrix half = DensityMatrix::maximally_mixed(2);
  const std::vector<double> eps{1e-3};
  const auto t = tightness_sequence(half, eps);
  REQUIRE(t.size() == 1);
  REQUIRE(t[0].ratio.has_value());
  CHECK(*t[0].ratio == Approx(phi(0.5) / 4).epsilon(1e-6));

  // For an unbalanced state the ratio equals phi(pi)/4 exactly at eps = 1 - 2 pi.
  const DensityMatrix skewed = DensityMatrix::diagonal(std::vector<double>{0.9, 0.1});
  const std::vector<double> at{0.8};
  CHECK(*tightness_sequence(skewed, at)[0].ratio == Approx(phi(0.1) / 4).epsilon(1e-12));
}

TEST_CASE("mixing-time bound") {
  const DensityMatrix sigma = DensityMatrix::diagonal(std::vector<double>{0.8, 0.2});
  const double expected = 2 * std::exp(-0.5) * std::sqrt(std::log(5.0) / phi(0.2));
  CHECK(mixing_time_bound(sigma, 0.5, 1.0) == Approx(expected));
}

}
