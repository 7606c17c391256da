#pragma once

// Seeded random states.
//
// The generator is SplitMix64: with state s (initially the derived seed),
//   s <- s + 0x9E3779B97F4A7C15
//   z <- s;  z <- (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//            z <- (z ^ (z >> 27)) * 0x94D049BB133111EB
//   output z ^ (z >> 31).
// Uniforms are ((z >> 11) + 0.5) * 2^-53 in (0, 1). Normals come from
// Box-Muller on two consecutive uniforms u1, u2: sqrt(-2 ln u1) cos(2 pi u2),
// followed by the matching sine value on the next call. A stream
// (seed, stream_id) starts from derive_seed(seed, stream_id), which is one
// SplitMix64 output of seed ^ (stream_id * 0xD1B54A32D192ED03).

#include <cstdint>
#include <span>
#include <vector>

#include "lsob/matcore.hpp"

namespace lsob {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream_id);

class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t next_u64();
  double uniform();
  double normal();
  /// Real and imaginary parts independent standard normals.
  Complex complex_normal();
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

enum class Ensemble { hilbert_schmidt, fixed_spectrum, pure, diagonal };

struct SamplerConfig {
  std::uint64_t seed = 0;
  int dim = 2;
  Ensemble ensemble = Ensemble::hilbert_schmidt;
};

/// Deterministic stream of states for one config:
///   hilbert_schmidt  G G^dagger / tr(G G^dagger), G complex Ginibre
///   fixed_spectrum   flat-Dirichlet spectrum in a Haar-random frame
///   pure             normalized complex Gaussian vector
///   diagonal         flat-Dirichlet spectrum in the standard basis
class StateSampler {
 public:
  explicit StateSampler(SamplerConfig config);

  DensityMatrix next();
  const SamplerConfig& config() const { return config_; }
  Rng& rng() { return rng_; }

 private:
  SamplerConfig config_;
  Rng rng_;
};

/// First state of the stream for `config`.
DensityMatrix random_density(const SamplerConfig& config);

DensityMatrix random_hilbert_schmidt(int dim, Rng& rng);
DensityMatrix random_pure_state(int dim, Rng& rng);

/// Uniform on the probability simplex (normalized exponentials).
Spectrum random_spectrum(int dim, Rng& rng);

/// Haar-random unitary: QR of a Ginibre matrix with the phases of R's
/// diagonal moved into Q. Redraws (bounded) on numerically singular draws.
ComplexMatrix random_unitary_frame(int dim, Rng& rng);
ComplexMatrix random_unitary_frame(int dim, std::uint64_t seed);

/// U diag(spectrum) U^dagger for Haar U.
DensityMatrix fixed_spectrum_state(const Spectrum& spectrum, Rng& rng);

/// Traceless Hermitian matrix with trace norm `norm`.
HermitianMatrix random_traceless_hermitian(int dim, Rng& rng, double norm);

}  // namespace lsob
