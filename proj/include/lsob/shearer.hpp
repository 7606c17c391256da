#pragma once

// Quantum Shearer inequality for exact covers and the entropy bound for
// tensor powers of the depolarizing semigroup.
//
// Sites are numbered 0..n-1.

#include <vector>

#include "lsob/matcore.hpp"
#include "lsob/sampler.hpp"

namespace lsob {

struct CoverFamily {
  int n = 0;
  std::vector<std::vector<int>> subsets;
  int t = 0;  // every site appears in exactly t subsets

  /// Throws ArgumentError unless every site is covered exactly t times and
  /// all subsets are nonempty, duplicate-free and in range.
  void validate() const;

  /// All k-subsets of n sites; multiplicity C(n-1, k-1).
  static CoverFamily k_uniform(int n, int k);

  /// Union of t random set partitions, each obtained by cutting a random
  /// permutation of the sites into consecutive blocks.
  static CoverFamily random_exact_cover(int n, int t, Rng& rng);
};

/// S of the marginal on `subset`.
double subset_entropy(const DensityMatrix& rho, std::span<const int> subset);

/// (1/t) sum_F S(F) - S(rho).
double shearer_slack(const DensityMatrix& rho, const CoverFamily& family);

/// (1/C(n,k)) sum_{|F|=k} S(F) - (k/n) S(rho).
double k_uniform_slack(const DensityMatrix& rho, int k);

/// S(T_t^{(x) n}(rho)) - e^{-t} S(rho) - (1 - e^{-t}) n S(sigma).
double theorem3_slack(const DensityMatrix& sigma, const DensityMatrix& rho, double t, int n);

}  // namespace lsob
