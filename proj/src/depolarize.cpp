#include "lsob/depolarize.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "lsob/errors.hpp"

namespace lsob {

namespace {

void require_time(double t) {
  if (!(t >= 0.0)) throw ArgumentError("time must be nonnegative, got " + std::to_string(t));
}

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw ArgumentError("dimension mismatch between sigma and rho");
}

}  // namespace

DepolarizingChannel::DepolarizingChannel(DensityMatrix sigma, double t) : sigma_(std::move(sigma)), t_(t) {
  require_time(t);
}

DensityMatrix DepolarizingChannel::apply(const DensityMatrix& rho) const {
  return semigroup_apply(sigma_, t_, rho);
}

HermitianMatrix liouvillian_apply(const DensityMatrix& sigma, const DensityMatrix& rho) {
  require_same_dim(sigma, rho);
  return HermitianMatrix(rho.matrix().trace() * sigma.matrix() - rho.matrix());
}

DensityMatrix semigroup_apply(const DensityMatrix& sigma, double t, const DensityMatrix& rho) {
  require_time(t);
  require_same_dim(sigma, rho);
  const double keep = std::exp(-t);
  std::vector<int> dims(rho.local_dims().begin(), rho.local_dims().end());
  return DensityMatrix(ComplexMatrix(-std::expm1(-t) * sigma.matrix() + keep * rho.matrix()),
                       std::move(dims));
}

ComplexMatrix replace_site(const ComplexMatrix& rho, std::span<const int> local_dims, int site,
                           const ComplexMatrix& sigma) {
  const int n = static_cast<int>(local_dims.size());
  if (site < 0 || site >= n) throw ArgumentError("site out of range");
  const int d = local_dims[site];
  if (sigma.rows() != d) throw ArgumentError("replacement state has wrong dimension");

  // Index i = (high, a, low) with a the digit at `site`.
  std::size_t low = 1;
  for (int f = site + 1; f < n; ++f) low *= local_dims[f];
  const std::size_t high = static_cast<std::size_t>(rho.rows()) / (low * d);
  const std::size_t rest = high * low;

  // Reduced state on the remaining factors, indexed by (high, low).
  ComplexMatrix reduced = ComplexMatrix::Zero(rest, rest);
  const auto full = [&](std::size_t r, std::size_t a) { return (r / low) * d * low + a * low + r % low; };
  for (std::size_t r = 0; r < rest; ++r) {
    for (std::size_t c = 0; c < rest; ++c) {
      Complex acc = 0.0;
      for (int a = 0; a < d; ++a) acc += rho(full(r, a), full(c, a));
      reduced(r, c) = acc;
    }
  }

  ComplexMatrix out(rho.rows(), rho.cols());
  for (std::size_t r = 0; r < rest; ++r) {
    for (std::size_t c = 0; c < rest; ++c) {
      for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) out(full(r, a), full(c, b)) = sigma(a, b) * reduced(r, c);
      }
    }
  }
  return out;
}

DensityMatrix tensor_semigroup_apply(const DensityMatrix& sigma, double t, int n, const DensityMatrix& rho,
                                     std::size_t cap) {
  require_time(t);
  checked_power_dim(sigma.dim(), n, cap);
  const auto dims = rho.local_dims();
  if (static_cast<int>(dims.size()) != n) {
    throw ArgumentError("rho has " + std::to_string(dims.size()) + " factors, expected " + std::to_string(n));
  }
  for (int d : dims) {
    if (d != sigma.dim()) throw ArgumentError("rho factor dimension does not match sigma");
  }

  const double keep = std::exp(-t);
  const double replace = -std::expm1(-t);
  ComplexMatrix state = rho.matrix();
  for (int site = 0; site < n; ++site) {
    state = keep * state + replace * replace_site(state, dims, site, sigma.matrix());
  }
  return DensityMatrix(std::move(state), std::vector<int>(dims.begin(), dims.end()));
}

}  // namespace lsob
