#pragma once

// Pinsker inequality with the optimal constant for a fixed second argument:
//   D(rho||sigma) >= phi(pi(sigma)) / 4 * ||rho - sigma||_1^2.

#include <optional>
#include <span>
#include <vector>

#include "lsob/entropy.hpp"
#include "lsob/matcore.hpp"

namespace lsob {

/// phi(p) = log((1 - p) / p) / (1 - 2p) on (0, 1/2], phi(1/2) = 2.
double phi(double p);

enum class BalanceMethod { automatic, exhaustive, dp };

/// How the balance coefficient reads its defining formula. `balanced` is
/// max_A min{P(A), 1 - P(A)}; `literal` is max_A min{1/2, P(A)}, which is
/// 1/2 for every state and is kept only for comparison.
enum class BalanceMode { balanced, literal };

struct BalanceResult {
  double pi = 0.0;
  std::vector<int> subset;  // indices into the descending spectrum
};

/// Balance coefficient of a spectrum. Exhaustive search is capped at 24
/// eigenvalues; the dynamic program quantizes eigenvalues to `resolution`
/// and is within 2 * resolution * d of the optimum. Exhaustive ties go to the
/// smallest subset, then the lexicographically smallest index list.
BalanceResult balance_pi(const Spectrum& spectrum, BalanceMethod method = BalanceMethod::automatic,
                         double resolution = 1e-6, BalanceMode mode = BalanceMode::balanced);

struct PinskerReport {
  double pi_sigma = 0.0;
  double phi_value = 0.0;
  double constant = 0.0;  // phi_value / 4
  std::vector<int> witness_subset;
};

PinskerReport pinsker_report(const Spectrum& spectrum, BalanceMode mode = BalanceMode::balanced);

/// Requires full-rank sigma.
PinskerReport improved_pinsker_constant(const DensityMatrix& sigma);

struct DistanceMinimum {
  ExtendedReal value = ExtendedReal::infinity();
  std::vector<int> subset;  // indices into the descending spectrum
  double block_weight = 0.0;
};

/// min over subsets A of D2(P(A) + eps/2 || P(A)); subsets with
/// P(A) + eps/2 >= 1 are skipped. Infinite when nothing is feasible.
DistanceMinimum min_relent_at_distance(const DensityMatrix& sigma, double epsilon);

/// State commuting with sigma whose weight on the eigenvectors in `subset`
/// (descending order indices) is P(A) + shift, rescaled proportionally to
/// sigma inside and outside the subset. Its trace distance to sigma is 2 shift.
DensityMatrix two_block_state(const DensityMatrix& sigma, std::span<const int> subset, double shift);

struct TightnessEntry {
  double epsilon;
  double trace_distance;
  std::optional<double> ratio;  // D(rho||sigma) / ||rho - sigma||^2; nullopt if infeasible
};

/// Two-block states over the balance-attaining subset B with P(B) = pi <= 1/2
/// moved by eps. The ratio reaches phi(pi)/4 at eps = 1 - 2 pi; as eps -> 0 it
/// tends to 1 / (8 pi (1 - pi)), which coincides with phi(pi)/4 only at pi = 1/2.
std::vector<TightnessEntry> tightness_sequence(const DensityMatrix& sigma, std::span<const double> epsilons);

/// 2 e^{-alpha t} sqrt(log(1 / s_min) / phi(pi(sigma))).
double mixing_time_bound(const DensityMatrix& sigma, double alpha, double t);

}  // namespace lsob
