#pragma once

// Entropy functionals in nats.

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "lsob/matcore.hpp"

namespace lsob {

inline constexpr double kSupportTol = 1e-12;
inline constexpr double kProximityTol = 1e-7;
inline constexpr double kRatioExtensionTol = 1e-9;
inline constexpr int kDefaultQuadPoints = 2000;

/// A real number or +infinity. Infinity compares greater than every finite value.
class ExtendedReal {
 public:
  static ExtendedReal finite(double value);
  static ExtendedReal infinity() { return ExtendedReal(true, 0.0); }

  bool is_finite() const { return !infinite_; }
  bool is_infinite() const { return infinite_; }
  /// Throws std::logic_error on the infinite branch.
  double value() const;
  double value_or(double fallback) const { return infinite_ ? fallback : value_; }

  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend std::partial_ordering operator<=>(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

 private:
  ExtendedReal(bool infinite, double value) : infinite_(infinite), value_(value) {}
  bool infinite_;
  double value_;
};

double von_neumann_entropy(const DensityMatrix& rho);

/// Shannon entropy of a probability vector (0 log 0 = 0).
double shannon_entropy(std::span<const double> p);

/// D(rho||sigma). Infinite iff some eigenvector of sigma with eigenvalue
/// below support_tol carries rho-weight above support_tol.
ExtendedReal relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                              double support_tol = kSupportTol);

/// Independent route to D(rho||sigma) through
///   int_0^inf tr[rho((rho + t)^-1 - (sigma + t)^-1)] dt,
/// mapped to [0, 1) by t = u/(1-u) and integrated with composite
/// Gauss-Legendre on panels graded geometrically toward u = 0, where the
/// integrand varies on the scale of the smallest eigenvalues. Resolvents are
/// formed by direct inversion. Both states must be full rank.
double relative_entropy_integral(const DensityMatrix& rho, const DensityMatrix& sigma,
                                 int quad_points = kDefaultQuadPoints);

/// p log(p/q) - p + q for p >= 0, q > 0. Nonnegative, and evaluated by a
/// series near p = q so that sums of these terms keep full relative
/// precision for nearly equal distributions.
double kl_term(double p, double q);

/// D2(x||y) for x in [0,1], y in (0,1).
double binary_relative_entropy(double x, double y);

/// q_y(x) = D2(y||x) / D2(x||y), extended by 1 at x = y and by +infinity
/// at x in {0, 1}.
ExtendedReal q_ratio(double x, double y);

/// Q_sigma(rho) = D(sigma||rho) / D(rho||sigma), extended by 1 when
/// ||rho - sigma||_1 < proximity_tol and +infinity for rank-deficient rho.
/// Pass proximity_tol = 0 to disable the shortcut. sigma must be full rank.
ExtendedReal Q_ratio(const DensityMatrix& rho, const DensityMatrix& sigma,
                     double proximity_tol = kProximityTol);

/// D(rho||sigma) + D(sigma||rho), the entropy production of the depolarizing
/// semigroup towards sigma at rho. Both states must be full rank.
double entropy_production_depolarizing(const DensityMatrix& rho, const DensityMatrix& sigma);

struct ContinuityEntry {
  double epsilon;
  std::optional<ExtendedReal> ratio;  // nullopt when sigma + eps X is not a state
};

/// Q_sigma(sigma + eps X) for each eps, without the proximity shortcut.
/// X must be traceless (|tr X| <= 1e-12) and nonzero; sigma full rank.
std::vector<ContinuityEntry> continuity_ratio_scan(const DensityMatrix& sigma,
                                                   const HermitianMatrix& x,
                                                   std::span<const double> epsilons);

}  // namespace lsob
