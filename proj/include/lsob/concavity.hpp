#pragma once

// Lower bounds on the concavity gap
//   S((1-q) sigma + q rho) - (1-q) S(sigma) - q S(rho)
// from the log-Sobolev-1 constant, compared with the trace-norm and
// relative-entropy bounds of Kim, Ruskai and coauthors.

#include <optional>

#include "lsob/entropy.hpp"
#include "lsob/matcore.hpp"

namespace lsob {

inline constexpr double kKimExclusionHalfwidth = 1e-3;

/// c = min_x D2(s||x) / D2(x||s) = 2 alpha1(s) - 1, for s in (0, 1/2].
double c_exponent(double s_min);

double concavity_gap(const DensityMatrix& sigma, const DensityMatrix& rho, double q);

struct Thm2Bound {
  double value = 0.0;         // max of the two branches
  double sigma_branch = 0.0;  // q (1 - q^c(sigma)) D(rho||sigma)
  double rho_branch = 0.0;    // (1-q) (1 - (1-q)^c(rho)) D(sigma||rho)
};

/// Each branch is evaluated on the support of its reference state when the
/// other state's support is contained in it, and is 0 otherwise.
Thm2Bound thm2_bound(const DensityMatrix& sigma, const DensityMatrix& rho, double q);

struct KimBounds {
  /// q(1-q)/(1-2q)^2 max{D(avg||rev), D(rev||avg)}; nullopt inside the
  /// window |q - 1/2| < exclusion_halfwidth where it is 0/0.
  std::optional<ExtendedReal> relent;
  double trace = 0.0;  // q(1-q)/2 ||rho - sigma||_1^2
};

KimBounds kim_bounds(const DensityMatrix& sigma, const DensityMatrix& rho, double q,
                     double exclusion_halfwidth = kKimExclusionHalfwidth);

/// thm2_bound branches with D replaced by the improved Pinsker lower bound
/// phi(pi)/4 ||rho - sigma||_1^2; a branch needs its reference state full rank.
double combined_trace_bound(const DensityMatrix& sigma, const DensityMatrix& rho, double q);

struct BoundReport {
  double q = 0.0;
  double gap = 0.0;
  double thm2_bound = 0.0;
  double thm2_sigma_branch = 0.0;
  double thm2_rho_branch = 0.0;
  std::optional<ExtendedReal> kim_relent_bound;
  double kim_trace_bound = 0.0;
  double combined_trace_bound = 0.0;
  double c_sigma = 0.0;
  double c_rho = 0.0;
};

/// Caches the q-independent pieces for one (sigma, rho) pair so sweeps over
/// q are cheap. Results match the free functions above.
class ConcavityPair {
 public:
  ConcavityPair(DensityMatrix sigma, DensityMatrix rho);

  BoundReport report(double q, double exclusion_halfwidth = kKimExclusionHalfwidth) const;
  double gap(double q) const;
  Thm2Bound thm2(double q) const;
  double combined_trace(double q) const;

  const DensityMatrix& sigma() const { return sigma_; }
  const DensityMatrix& rho() const { return rho_; }

 private:
  struct Branch {
    bool active = false;  // false: trivial branch, value 0
    double c = 0.0;
    double relent = 0.0;
    std::optional<double> pinsker_constant;  // only for full-rank reference
  };
  static Branch make_branch(const DensityMatrix& reference, const DensityMatrix& other);

  DensityMatrix sigma_;
  DensityMatrix rho_;
  double s_sigma_, s_rho_;
  double trace_distance_;
  Branch sigma_branch_, rho_branch_;
};

}  // namespace lsob
