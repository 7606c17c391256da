#pragma once

// Log-Sobolev-1 constant of the depolarizing Liouvillian L_sigma.
//
// The closed form only depends on the smallest eigenvalue s of sigma:
//   alpha1 = min_{x in [0,1]} (1 + q_s(x)) / 2.
// The brute-force oracle instead scans every two-block split of the full
// spectrum and samples random states, so agreement between the two checks
// that the smallest eigenvalue is the only thing that matters.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "lsob/entropy.hpp"
#include "lsob/matcore.hpp"

namespace lsob {

enum class Alpha1Method { closed_form, brute_force };

struct Alpha1Result {
  double alpha1 = 0.0;
  double argmin_x = 0.0;  // block weight of the minimizing two-block state
  double s_min = 0.0;
  double lower_bound = 0.0;
  Alpha1Method method = Alpha1Method::closed_form;

  // Brute-force only. Indices refer to sigma's eigenvalues in ascending order.
  std::vector<int> witness_subset;
  double subset_alpha1 = 0.0;   // best value over two-block splits
  double sampled_alpha1 = 0.0;  // best value over random and polished states
  std::vector<double> minimizer_spectrum;  // polished commuting minimizer, sigma's eigenbasis order
};

struct ScalarMinimum {
  double x;
  double value;
};

/// Grid of `grid` points on [delta, 1 - delta] followed by golden-section
/// refinement to `width` inside the bracket of the best grid point. Ties on
/// the grid go to the lowest x.
ScalarMinimum minimize_unit_interval(const std::function<double(double)>& f, int grid = 4096,
                                     double delta = 1e-9, double width = 1e-12);

/// alpha1 for s_min in (0, 1). Values above 1/2 are mapped to 1 - s_min.
Alpha1Result alpha1_depolarizing(double s_min);

/// 1/2 + sqrt(s (1 - s)) for s in (0, 1).
double alpha1_lower_bound(double s_min);

struct BruteForceOptions {
  int subset_limit = 12;
  int x_grid = 4096;
  int random_samples = 10000;
  std::uint64_t seed = 0;
  /// Number of Nelder-Mead restarts over commuting spectra (0 disables).
  int polish_starts = 4;
};

/// Independent oracle for alpha1(L_sigma): minimum over (a) every nonempty
/// proper subset A of sigma's spectrum with the two-block ratio q_{P(A)}
/// minimized on a dense x grid, (b) Hilbert-Schmidt random full-rank states
/// through Q_ratio, and (c) locally optimized commuting spectra.
/// Throws ResourceError if sigma.dim() > subset_limit.
Alpha1Result alpha1_bruteforce(const DensityMatrix& sigma, const BruteForceOptions& options = {});

/// Q_sigma for commuting states given by spectra in the same eigenbasis.
ExtendedReal classical_Q(std::span<const double> r, std::span<const double> s,
                         double proximity_tol = kProximityTol);

/// min over permutations pi of Q_sigma(rho_pi), where rho_pi has rho's
/// eigenvalues placed on sigma's eigenvectors in the order pi. d <= 8.
ExtendedReal best_commuting_value(const DensityMatrix& rho, const DensityMatrix& sigma);

/// True iff the ratios r_j / s_j fall into at most two clusters of width <= tol.
bool minimizer_two_ratio_check(std::span<const double> r, std::span<const double> s, double tol);

/// Local minimization of classical_Q over commuting spectra with Nelder-Mead
/// in log-ratio coordinates, starting from `start` (sigma's eigenbasis order).
std::vector<double> polish_commuting_minimizer(std::span<const double> s, std::span<const double> start);

struct UnimodalityReport {
  bool is_unimodal = false;
  double m_f = 0.0;         // peak location
  double peak_value = 0.0;
  double endpoint_value = 0.0;  // f_x(0) = f_x(1)
  double worst_violation = 0.0;  // largest rise against the expected direction
};

/// Scans y -> q_y(x) on the grid k / y_grid, k = 0..y_grid, with the
/// endpoint extension f_x(0) = f_x(1) = 0. y_grid >= 1000.
UnimodalityReport unimodality_scan(double x, int y_grid, double tol = 1e-9);

/// h_x(y) = y (1 - y) / (y^2 + x - 2 y x).
double mh_objective(double x, double y);

/// Stationary point (x - sqrt(x (1 - x))) / (2x - 1) of h_x, x in (1/2, 1).
double mh_formula(double x);

}  // namespace lsob
