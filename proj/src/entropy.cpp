#include "lsob/entropy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "lsob/errors.hpp"

namespace lsob {

namespace {

// (1+e) log(1+e) - e, accurate for small |e|.
double excess_log_term(double e) {
  if (e == -1.0) return 1.0;
  if (std::abs(e) < 0.1) {
    // sum_{k>=2} (-1)^k e^k / (k (k-1))
    double power = e * e, sum = 0.0;
    for (int k = 2; k < 24; ++k) {
      const double term = power / (k * (k - 1.0));
      sum += (k % 2 == 0) ? term : -term;
      power *= e;
    }
    return sum;
  }
  return (1.0 + e) * std::log1p(e) - e;
}

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Nodes and weights on [-1, 1] by Newton iteration on P_n.
GaussRule gauss_legendre(int n) {
  GaussRule rule{std::vector<double>(n), std::vector<double>(n)};
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) {
    throw ArgumentError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                        std::to_string(b.dim()));
  }
}

}  // namespace

ExtendedReal ExtendedReal::finite(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("ExtendedReal::finite requires a finite value");
  return ExtendedReal(false, value);
}

double ExtendedReal::value() const {
  if (infinite_) throw std::logic_error("value() called on infinite ExtendedReal");
  return value_;
}

double shannon_entropy(std::span<const double> p) {
  double s = 0.0;
  for (double v : p) {
    if (v > 0.0) s -= v * std::log(v);
  }
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const auto& ev = rho.eigenvalues();
  return shannon_entropy(std::span<const double>(ev.data(), ev.size()));
}

ExtendedReal relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma, double support_tol) {
  require_same_dim(rho, sigma);
  const auto& s = sigma.eigenvalues();
  const auto& v = sigma.eigenvectors();
  // rho-weight on each eigenvector of sigma
  const RealVector w = (v.adjoint() * rho.matrix() * v).diagonal().real();

  double cross = 0.0;
  for (int j = 0; j < s.size(); ++j) {
    if (s(j) < support_tol) {
      if (w(j) > support_tol) return ExtendedReal::infinity();
      continue;
    }
    cross += w(j) * std::log(s(j));
  }
  const double value = -von_neumann_entropy(rho) - cross;
  return ExtendedReal::finite(std::max(value, 0.0));
}

double relative_entropy_integral(const DensityMatrix& rho, const DensityMatrix& sigma, int quad_points) {
  require_same_dim(rho, sigma);
  if (!rho.is_full_rank() || !sigma.is_full_rank()) {
    throw PreconditionError("relative_entropy_integral requires full-rank states");
  }
  constexpr int kNodesPerPanel = 20;
  if (quad_points < 4 * kNodesPerPanel) throw ArgumentError("quad_points too small");

  // Panel boundaries: geometric on (0, 1/2] down to 1e-15, uniform on [1/2, 1].
  const int panels = quad_points / kNodesPerPanel;
  const int graded = (3 * panels) / 5;
  const int uniform = panels - graded;
  std::vector<double> bounds{0.0};
  for (int k = 1; k <= graded; ++k) {
    bounds.push_back(0.5 * std::pow(2e-15, static_cast<double>(graded - k) / (graded - 1)));
  }
  for (int k = 1; k <= uniform; ++k) bounds.push_back(0.5 + 0.5 * k / uniform);

  const int d = rho.dim();
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const auto integrand = [&](double u) {
    const double t = u / (1.0 - u);
    const double jac = 1.0 / ((1.0 - u) * (1.0 - u));
    const ComplexMatrix ra = (rho.matrix() + t * id).inverse();
    const ComplexMatrix rb = (sigma.matrix() + t * id).inverse();
    return jac * (rho.matrix() * (rb - ra)).trace().real();
  };

  static const GaussRule rule = gauss_legendre(kNodesPerPanel);
  double total = 0.0;
  for (std::size_t p = 0; p + 1 < bounds.size(); ++p) {
    const double a = bounds[p], b = bounds[p + 1];
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    double panel = 0.0;
    for (int i = 0; i < kNodesPerPanel; ++i) panel += rule.weights[i] * integrand(mid + half * rule.nodes[i]);
    total += half * panel;
  }
  return total;
}

double kl_term(double p, double q) { return q * excess_log_term((p - q) / q); }

double binary_relative_entropy(double x, double y) {
  if (!(x >= 0.0 && x <= 1.0)) throw ArgumentError("binary_relative_entropy: x outside [0, 1]");
  if (!(y > 0.0 && y < 1.0)) throw ArgumentError("binary_relative_entropy: y outside (0, 1)");
  // The linear parts of the two kl_terms cancel exactly, and each term is
  // nonnegative, so nothing cancels numerically near x = y.
  return kl_term(x, y) + kl_term(1.0 - x, 1.0 - y);
}

ExtendedReal q_ratio(double x, double y) {
  if (!(x >= 0.0 && x <= 1.0)) throw ArgumentError("q_ratio: x outside [0, 1]");
  if (!(y > 0.0 && y < 1.0)) throw ArgumentError("q_ratio: y outside (0, 1)");
  if (std::abs(x - y) < kRatioExtensionTol) return ExtendedReal::finite(1.0);
  if (x == 0.0 || x == 1.0) return ExtendedReal::infinity();
  return ExtendedReal::finite(binary_relative_entropy(y, x) / binary_relative_entropy(x, y));
}

ExtendedReal Q_ratio(const DensityMatrix& rho, const DensityMatrix& sigma, double proximity_tol) {
  require_same_dim(rho, sigma);
  if (!sigma.is_full_rank()) throw PreconditionError("Q_ratio requires a full-rank sigma");
  if (proximity_tol > 0.0 && trace_norm(rho - sigma) < proximity_tol) return ExtendedReal::finite(1.0);
  const ExtendedReal numerator = relative_entropy(sigma, rho);
  if (numerator.is_infinite()) return numerator;
  const double denominator = relative_entropy(rho, sigma).value();
  if (denominator == 0.0) return ExtendedReal::finite(1.0);
  return ExtendedReal::finite(numerator.value() / denominator);
}

double entropy_production_depolarizing(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  if (!rho.is_full_rank() || !sigma.is_full_rank()) {
    throw PreconditionError("entropy production requires full-rank states");
  }
  return relative_entropy(rho, sigma).value() + relative_entropy(sigma, rho).value();
}

std::vector<ContinuityEntry> continuity_ratio_scan(const DensityMatrix& sigma, const HermitianMatrix& x,
                                                   std::span<const double> epsilons) {
  if (x.dim() != sigma.dim()) throw ArgumentError("perturbation dimension mismatch");
  if (!sigma.is_full_rank()) throw PreconditionError("continuity scan requires a full-rank sigma");
  if (std::abs(x.trace()) > 1e-12) throw ArgumentError("perturbation must be traceless");
  if (x.matrix().cwiseAbs().maxCoeff() == 0.0) throw ArgumentError("perturbation must be nonzero");

  std::vector<ContinuityEntry> out;
  out.reserve(epsilons.size());
  for (double eps : epsilons) {
    if (eps == 0.0) {
      out.push_back({eps, ExtendedReal::finite(1.0)});
      continue;
    }
    const HermitianMatrix shifted(sigma.matrix() + eps * x.matrix());
    if (eigh(shifted).values(0) < 0.0) {
      out.push_back({eps, std::nullopt});
      continue;
    }
    std::vector<int> dims(sigma.local_dims().begin(), sigma.local_dims().end());
    out.push_back({eps, Q_ratio(DensityMatrix(shifted, std::move(dims)), sigma, 0.0)});
  }
  return out;
}

}  // namespace lsob
