#include <doctest.h>

#include <cmath>
#include <vector>

#include "lsob/concavity.hpp"
#include "lsob/entropy.hpp"
#include "lsob/errors.hpp"
#include "lsob/logsobolev.hpp"
#include "lsob/sampler.hpp"

using namespace lsob;
using doctest::Approx;

namespace {

DensityMatrix diag(std::vector<double> p) { return DensityMatrix::diagonal(p); }

double h(double p) { return p <= 0 || p >= 1 ? 0.0 : -p * std::log(p) - (1 - p) * std::log(1 - p); }

}  // namespace

TEST_SUITE("concavity") {

TEST_CASE("c exponent") {
  CHECK(c_exponent(0.5) == Approx(1.0).epsilon(1e-6));
  CHECK(c_exponent(0.1) == Approx(2 * 0.86012167795235448 - 1).epsilon(1e-10));
  CHECK_THROWS_AS(c_exponent(0.6), ArgumentError);
  CHECK_THROWS_AS(c_exponent(0.0), ArgumentError);
}

TEST_CASE("concavity gap of classical states") {
  CHECK(concavity_gap(diag({1.0, 0.0}), diag({0.0, 1.0}), 0.5) == Approx(std::log(2.0)));
  // Commuting qubits: gap = h(mix) - (1-q) h(a) - q h(b).
  const double q = 0.3;
  const double expected = h(0.7 * 0.2 + 0.3 * 0.6) - 0.7 * h(0.2) - 0.3 * h(0.6);
  CHECK(concavity_gap(diag({0.2, 0.8}), diag({0.6, 0.4}), q) == Approx(expected));
  CHECK(concavity_gap(diag({0.2, 0.8}), diag({0.6, 0.4}), 0.0) == Approx(0.0).epsilon(1e-15));
}

TEST_CASE("bound for the maximally mixed reference") {
  const DensityMatrix sigma = DensityMatrix::maximally_mixed(2);
  const DensityMatrix rho = diag({0.9, 0.1});
  const double d = relative_entropy(rho, sigma).value();
  const Thm2Bound b = thm2_bound(sigma, rho, 0.3);
  CHECK(b.sigma_branch == Approx(0.21 * d).epsilon(1e-6));
  CHECK(b.value >= b.sigma_branch);
  CHECK(b.value <= concavity_gap(sigma, rho, 0.3));
}

TEST_CASE("rank-deficient branches") {
  // Disjoint supports: both branches trivial.
  const Thm2Bound b = thm2_bound(diag({1.0, 0.0}), diag({0.0, 1.0}), 0.5);
  CHECK(b.value == 0.0);
  // rho inside the support of a full-rank sigma: only the sigma branch is live.
  const Thm2Bound c = thm2_bound(diag({0.5, 0.5}), diag({1.0, 0.0}), 0.4);
  CHECK(c.sigma_branch > 0.0);
  CHECK(c.rho_branch == 0.0);
}

TEST_CASE("Kim bounds") {
  const DensityMatrix sigma = diag({0.7, 0.3});
  const DensityMatrix rho = diag({0.2, 0.8});
  const double q = 0.2;
  const KimBounds k = kim_bounds(sigma, rho, q);
  CHECK(k.trace == Approx(0.5 * q * (1 - q) * 1.0));
  REQUIRE(k.relent.has_value());
  CHECK(k.relent->value() >= k.trace);
  // The relative-entropy bound in this form overshoots the gap for this
  // commuting pair: 0.0853520 against 0.0842397.
  CHECK(k.relent->value() == Approx(0.08535199696079906).epsilon(1e-10));
  CHECK(concavity_gap(sigma, rho, q) == Approx(0.08423974065770412).epsilon(1e-10));

  CHECK_FALSE(kim_bounds(sigma, rho, 0.5).relent.has_value());
  CHECK_FALSE(kim_bounds(sigma, rho, 0.5005).relent.has_value());
  CHECK(kim_bounds(sigma, rho, 0.502).relent.has_value());
  CHECK(kim_bounds(sigma, rho, 0.0).relent->value() == 0.0);

  Rng rng(13);
  for (int i = 0; i < 30; ++i) {
    const DensityMatrix s = random_hilbert_schmidt(3, rng), r = random_hilbert_schmidt(3, rng);
    for (double qq : {0.05, 0.3, 0.7, 0.95}) {
      const KimBounds kb = kim_bounds(s, r, qq);
      CHECK(kb.relent->value() >= kb.trace - 1e-12);
    }
  }
}

TEST_CASE("combined bound sits below the relative-entropy bound") {
  Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    const DensityMatrix s = random_hilbert_schmidt(3, rng), r = random_hilbert_schmidt(3, rng);
    for (double q : {0.1, 0.5, 0.9}) {
      const double t = thm2_bound(s, r, q).value;
      CHECK(combined_trace_bound(s, r, q) <= t + 1e-12);
      CHECK(t <= concavity_gap(s, r, q) + 1e-12);
    }
  }
}

TEST_CASE("cached pair matches the free functions") {
  Rng rng(2);
  const DensityMatrix s = random_hilbert_schmidt(4, rng), r = random_hilbert_schmidt(4, rng);
  const ConcavityPair pair(s, r);
  for (double q : {0.0, 0.25, 0.6, 1.0}) {
    const BoundReport rep = pair.report(q);
    CHECK(rep.gap == Approx(concavity_gap(s, r, q)).epsilon(1e-12));
    CHECK(rep.thm2_bound == Approx(thm2_bound(s, r, q).value).epsilon(1e-12));
    CHECK(rep.kim_trace_bound == Approx(kim_bounds(s, r, q).trace).epsilon(1e-12));
    CHECK(rep.combined_trace_bound == Approx(combined_trace_bound(s, r, q)).epsilon(1e-12));
  }
}

}
