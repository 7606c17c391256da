#pragma once

// Generalized depolarizing semigroup T_t(rho) = (1 - e^-t) tr[rho] sigma + e^-t rho
// and its tensor powers.

#include <cstddef>

#include "lsob/matcore.hpp"

namespace lsob {

class DepolarizingChannel {
 public:
  /// Throws ArgumentError if t < 0.
  DepolarizingChannel(DensityMatrix sigma, double t);

  const DensityMatrix& sigma() const { return sigma_; }
  double t() const { return t_; }
  DensityMatrix apply(const DensityMatrix& rho) const;

 private:
  DensityMatrix sigma_;
  double t_;
};

/// L_sigma(rho) = tr[rho] sigma - rho.
HermitianMatrix liouvillian_apply(const DensityMatrix& sigma, const DensityMatrix& rho);

DensityMatrix semigroup_apply(const DensityMatrix& sigma, double t, const DensityMatrix& rho);

/// (T_t)^{(x) n}(rho) by composing the single-site channel on each factor.
/// rho.local_dims() must be (sigma.dim(),) * n.
DensityMatrix tensor_semigroup_apply(const DensityMatrix& sigma, double t, int n,
                                     const DensityMatrix& rho,
                                     std::size_t cap = kDefaultDimCap);

/// tr_site(rho) with sigma re-inserted at `site`; local_dims are preserved.
ComplexMatrix replace_site(const ComplexMatrix& rho, std::span<const int> local_dims, int site,
                           const ComplexMatrix& sigma);

}  // namespace lsob
