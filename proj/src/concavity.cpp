#include "lsob/concavity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lsob/errors.hpp"
#include "lsob/logsobolev.hpp"
#include "lsob/pinsker.hpp"

namespace lsob {

namespace {

void require_q(double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw ArgumentError("q must lie in [0, 1], got " + std::to_string(q));
}

double branch_value(double weight, double c, double magnitude) {
  if (weight == 0.0) return 0.0;
  return weight * (1.0 - std::pow(weight, c)) * magnitude;
}

}  // namespace

double c_exponent(double s_min) {
  if (!(s_min > 0.0 && s_min <= 0.5)) {
    throw ArgumentError("c_exponent: s_min must lie in (0, 1/2], got " + std::to_string(s_min));
  }
  return 2.0 * alpha1_depolarizing(s_min).alpha1 - 1.0;
}

ConcavityPair::Branch ConcavityPair::make_branch(const DensityMatrix& reference, const DensityMatrix& other) {
  Branch b;
  const ExtendedReal relent = relative_entropy(other, reference);
  if (relent.is_infinite() || reference.dim() < 2) return b;
  b.relent = relent.value();

  if (reference.is_full_rank()) {
    b.active = true;
    b.c = c_exponent(reference.min_eigenvalue());
    b.pinsker_constant = improved_pinsker_constant(reference).constant;
    return b;
  }

  // Restrict to supp(reference); `other` lives there because D is finite.
  const auto& ev = reference.eigenvalues();
  int first = 0;
  while (first < ev.size() && ev(first) < kSupportTol) ++first;
  const int k = static_cast<int>(ev.size()) - first;
  if (k < 2) return b;
  std::vector<double> support(ev.data() + first, ev.data() + ev.size());
  double total = 0.0;
  for (double v : support) total += v;
  const double s_min = support.front() / total;
  b.active = true;
  b.c = c_exponent(std::min(s_min, 0.5));
  return b;
}

ConcavityPair::ConcavityPair(DensityMatrix sigma, DensityMatrix rho)
    : sigma_(std::move(sigma)), rho_(std::move(rho)) {
  if (sigma_.dim() != rho_.dim()) throw ArgumentError("ConcavityPair: dimension mismatch");
  s_sigma_ = von_neumann_entropy(sigma_);
  s_rho_ = von_neumann_entropy(rho_);
  trace_distance_ = trace_norm(rho_ - sigma_);
  sigma_branch_ = make_branch(sigma_, rho_);
  rho_branch_ = make_branch(rho_, sigma_);
}

double ConcavityPair::gap(double q) const {
  require_q(q);
  const DensityMatrix mixed = mix(sigma_, rho_, q);
  return von_neumann_entropy(mixed) - (1.0 - q) * s_sigma_ - q * s_rho_;
}

Thm2Bound ConcavityPair::thm2(double q) const {
  require_q(q);
  Thm2Bound out;
  if (sigma_branch_.active) out.sigma_branch = branch_value(q, sigma_branch_.c, sigma_branch_.relent);
  if (rho_branch_.active) out.rho_branch = branch_value(1.0 - q, rho_branch_.c, rho_branch_.relent);
  out.value = std::max(out.sigma_branch, out.rho_branch);
  return out;
}

double ConcavityPair::combined_trace(double q) const {
  require_q(q);
  const double t2 = trace_distance_ * trace_distance_;
  double out = 0.0;
  if (sigma_branch_.pinsker_constant) {
    out = std::max(out, branch_value(q, sigma_branch_.c, *sigma_branch_.pinsker_constant * t2));
  }
  if (rho_branch_.pinsker_constant) {
    out = std::max(out, branch_value(1.0 - q, rho_branch_.c, *rho_branch_.pinsker_constant * t2));
  }
  return out;
}

BoundReport ConcavityPair::report(double q, double exclusion_halfwidth) const {
  BoundReport r;
  r.q = q;
  r.gap = gap(q);
  const Thm2Bound t = thm2(q);
  r.thm2_bound = t.value;
  r.thm2_sigma_branch = t.sigma_branch;
  r.thm2_rho_branch = t.rho_branch;
  const KimBounds kim = kim_bounds(sigma_, rho_, q, exclusion_halfwidth);
  r.kim_relent_bound = kim.relent;
  r.kim_trace_bound = kim.trace;
  r.combined_trace_bound = combined_trace(q);
  r.c_sigma = sigma_branch_.c;
  r.c_rho = rho_branch_.c;
  return r;
}

double concavity_gap(const DensityMatrix& sigma, const DensityMatrix& rho, double q) {
  require_q(q);
  if (sigma.dim() != rho.dim()) throw ArgumentError("concavity_gap: dimension mismatch");
  return von_neumann_entropy(mix(sigma, rho, q)) - (1.0 - q) * von_neumann_entropy(sigma) -
         q * von_neumann_entropy(rho);
}

Thm2Bound thm2_bound(const DensityMatrix& sigma, const DensityMatrix& rho, double q) {
  return ConcavityPair(sigma, rho).thm2(q);
}

KimBounds kim_bounds(const DensityMatrix& sigma, const DensityMatrix& rho, double q, double exclusion_halfwidth) {
  require_q(q);
  if (sigma.dim() != rho.dim()) throw ArgumentError("kim_bounds: dimension mismatch");
  KimBounds out;
  const double tn = trace_norm(rho - sigma);
  out.trace = 0.5 * q * (1.0 - q) * tn * tn;
  if (std::abs(q - 0.5) < exclusion_halfwidth) return out;
  if (q == 0.0 || q == 1.0) {
    out.relent = ExtendedReal::finite(0.0);
    return out;
  }
  const DensityMatrix avg = mix(sigma, rho, q);
  const DensityMatrix rev = mix(rho, sigma, q);
  const ExtendedReal larger = std::max(relative_entropy(avg, rev), relative_entropy(rev, avg));
  const double prefactor = q * (1.0 - q) / ((1.0 - 2.0 * q) * (1.0 - 2.0 * q));
  out.relent = larger.is_infinite() ? larger : ExtendedReal::finite(prefactor * larger.value());
  return out;
}

double combined_trace_bound(const DensityMatrix& sigma, const DensityMatrix& rho, double q) {
  return ConcavityPair(sigma, rho).combined_trace(q);
}

}  // namespace lsob
