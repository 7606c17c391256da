#include "lsob/sampler.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/QR>

#include "lsob/errors.hpp"

namespace lsob {

namespace {

std::uint64_t splitmix_step(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

ComplexMatrix ginibre(int dim, Rng& rng) {
  ComplexMatrix g(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) g(i, j) = rng.complex_normal();
  }
  return g;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream_id) {
  std::uint64_t state = seed ^ (stream_id * 0xD1B54A32D192ED03ULL);
  return splitmix_step(state);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream_id) : state_(derive_seed(seed, stream_id)) {}

std::uint64_t Rng::next_u64() { return splitmix_step(state_); }

double Rng::uniform() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw ArgumentError("Rng::below requires n > 0");
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = next_u64();
  } while (v >= limit);
  return v % n;
}

StateSampler::StateSampler(SamplerConfig config) : config_(config), rng_(config.seed) {
  if (config.dim < 1) throw ArgumentError("sampler dimension must be >= 1");
}

DensityMatrix StateSampler::next() {
  switch (config_.ensemble) {
    case Ensemble::hilbert_schmidt:
      return random_hilbert_schmidt(config_.dim, rng_);
    case Ensemble::fixed_spectrum:
      return fixed_spectrum_state(random_spectrum(config_.dim, rng_), rng_);
    case Ensemble::pure:
      return random_pure_state(config_.dim, rng_);
    case Ensemble::diagonal: {
      const Spectrum s = random_spectrum(config_.dim, rng_);
      return DensityMatrix::diagonal(s.values());
    }
  }
  throw ArgumentError("unknown ensemble");
}

DensityMatrix random_density(const SamplerConfig& config) { return StateSampler(config).next(); }

DensityMatrix random_hilbert_schmidt(int dim, Rng& rng) {
  const ComplexMatrix g = ginibre(dim, rng);
  ComplexMatrix w = g * g.adjoint();
  w /= w.trace().real();
  return DensityMatrix(0.5 * (w + w.adjoint()));
}

DensityMatrix random_pure_state(int dim, Rng& rng) {
  ComplexVector psi(dim);
  for (int i = 0; i < dim; ++i) psi(i) = rng.complex_normal();
  return DensityMatrix::pure(psi);
}

Spectrum random_spectrum(int dim, Rng& rng) {
  std::vector<double> v(dim);
  double sum = 0.0;
  for (double& x : v) {
    x = -std::log(rng.uniform());
    sum += x;
  }
  for (double& x : v) x /= sum;
  // Absorb rounding so the sum is 1 to the last bit that matters.
  double rest = 1.0;
  for (int i = 1; i < dim; ++i) rest -= v[i];
  v[0] = rest;
  return Spectrum(std::move(v));
}

ComplexMatrix random_unitary_frame(int dim, Rng& rng) {
  if (dim < 1) throw ArgumentError("frame dimension must be >= 1");
  for (int attempt = 0; attempt < 16; ++attempt) {
    const ComplexMatrix g = ginibre(dim, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    bool singular = false;
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
    for (int i = 0; i < dim; ++i) {
      const double mag = std::abs(r(i, i));
      if (mag < 1e-12) {
        singular = true;
        break;
      }
      q.col(i) *= r(i, i) / mag;
    }
    if (!singular) return q;
  }
  throw ConvergenceError("random_unitary_frame: repeated singular Ginibre draws");
}

ComplexMatrix random_unitary_frame(int dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_unitary_frame(dim, rng);
}

DensityMatrix fixed_spectrum_state(const Spectrum& spectrum, Rng& rng) {
  const ComplexMatrix u = random_unitary_frame(static_cast<int>(spectrum.size()), rng);
  return DensityMatrix::from_frame(u, spectrum.values());
}

HermitianMatrix random_traceless_hermitian(int dim, Rng& rng, double norm) {
  if (!(norm > 0.0)) throw ArgumentError("norm must be positive");
  if (dim < 2) throw ArgumentError("a nonzero traceless Hermitian matrix needs dim >= 2");
  const ComplexMatrix g = ginibre(dim, rng);
  ComplexMatrix h = 0.5 * (g + g.adjoint());
  h -= (h.trace() / static_cast<double>(dim)) * ComplexMatrix::Identity(dim, dim);
  const double tn = trace_norm(HermitianMatrix(h));
  h *= norm / tn;
  // Projection after scaling keeps the trace at round-off level.
  h -= (h.trace() / static_cast<double>(dim)) * ComplexMatrix::Identity(dim, dim);
  return HermitianMatrix(std::move(h));
}

}  // namespace lsob
