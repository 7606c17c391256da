#include "lsob/logsobolev.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "lsob/errors.hpp"
#include "lsob/sampler.hpp"

namespace lsob {

namespace {

constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5) - 1) / 2
constexpr double kHuge = std::numeric_limits<double>::max();

double finite_or_huge(const ExtendedReal& v) { return v.value_or(kHuge); }

// Dense grid followed by repeated re-gridding of the bracket around the best
// point. Deliberately a different refinement scheme from the golden-section
// search used by the closed form.
ScalarMinimum zoom_minimize(const std::function<double(double)>& f, int grid) {
  double lo = 1e-9, hi = 1.0 - 1e-9;
  ScalarMinimum best{lo, kHuge};
  int points = grid;
  while (hi - lo > 1e-12) {
    const double step = (hi - lo) / (points - 1);
    int best_k = 0;
    double best_v = kHuge;
    for (int k = 0; k < points; ++k) {
      const double v = f(lo + k * step);
      if (v < best_v) {
        best_v = v;
        best_k = k;
      }
    }
    if (best_v < best.value) best = {lo + best_k * step, best_v};
    const double center = lo + best_k * step;
    lo = std::max(1e-9, center - step);
    hi = std::min(1.0 - 1e-9, center + step);
    points = 64;
  }
  return best;
}

using Objective = std::function<double(const std::vector<double>&)>;

std::vector<double> nelder_mead(const Objective& f, std::vector<double> start, double initial_step,
                                int max_iter) {
  const std::size_t n = start.size();
  std::vector<std::vector<double>> simplex(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += initial_step;
  std::vector<double> values(n + 1);
  for (std::size_t i = 0; i <= n; ++i) values[i] = f(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  for (int iter = 0; iter < max_iter; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];

    double size = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t k = 0; k < n; ++k) size = std::max(size, std::abs(simplex[i][k] - simplex[best][k]));
    }
    if (size < 1e-11 && values[worst] - values[best] < 1e-15) break;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k] / n;
    }
    const auto along = [&](double coeff) {
      std::vector<double> p(n);
      for (std::size_t k = 0; k < n; ++k) p[k] = centroid[k] + coeff * (simplex[worst][k] - centroid[k]);
      return p;
    };

    auto reflected = along(-1.0);
    const double fr = f(reflected);
    if (fr < values[best]) {
      auto expanded = along(-2.0);
      const double fe = f(expanded);
      if (fe < fr) {
        simplex[worst] = std::move(expanded);
        values[worst] = fe;
      } else {
        simplex[worst] = std::move(reflected);
        values[worst] = fr;
      }
    } else if (fr < values[second]) {
      simplex[worst] = std::move(reflected);
      values[worst] = fr;
    } else {
      auto contracted = fr < values[worst] ? along(-0.5) : along(0.5);
      const double fc = f(contracted);
      if (fc < std::min(fr, values[worst])) {
        simplex[worst] = std::move(contracted);
        values[worst] = fc;
      } else {
        for (std::size_t i = 0; i <= n; ++i) {
          if (i == best) continue;
          for (std::size_t k = 0; k < n; ++k) simplex[i][k] = simplex[best][k] + 0.5 * (simplex[i][k] - simplex[best][k]);
          values[i] = f(simplex[i]);
        }
      }
    }
  }
  const auto it = std::min_element(values.begin(), values.end());
  return simplex[static_cast<std::size_t>(it - values.begin())];
}

std::vector<double> spectrum_from_log_ratios(std::span<const double> s, const std::vector<double>& z) {
  std::vector<double> r(s.size());
  double total = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    r[i] = s[i] * std::exp(i + 1 < s.size() ? z[i] : 0.0);
    total += r[i];
  }
  for (double& v : r) v /= total;
  return r;
}

std::vector<double> ascending_eigenvalues(const DensityMatrix& rho) {
  const auto& ev = rho.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

}  // namespace

ScalarMinimum minimize_unit_interval(const std::function<double(double)>& f, int grid, double delta,
                                     double width) {
  if (grid < 3) throw ArgumentError("minimization grid needs at least 3 points");
  const double lo = delta, hi = 1.0 - delta;
  const double step = (hi - lo) / (grid - 1);
  int best_k = 0;
  double best_v = kHuge;
  for (int k = 0; k < grid; ++k) {
    const double v = f(lo + k * step);
    if (v < best_v) {
      best_v = v;
      best_k = k;
    }
  }

  double a = lo + std::max(best_k - 1, 0) * step;
  double b = lo + std::min(best_k + 1, grid - 1) * step;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > width) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
    if (b - a < width || c >= d) break;
  }
  ScalarMinimum refined = fc <= fd ? ScalarMinimum{c, fc} : ScalarMinimum{d, fd};
  if (best_v <= refined.value) return {lo + best_k * step, best_v};
  return refined;
}

double alpha1_lower_bound(double s_min) {
  if (!(s_min > 0.0 && s_min < 1.0)) {
    throw ArgumentError("alpha1_lower_bound: s_min must lie in (0, 1), got " + std::to_string(s_min));
  }
  return 0.5 + std::sqrt(s_min * (1.0 - s_min));
}

Alpha1Result alpha1_depolarizing(double s_min) {
  if (!(s_min > 0.0 && s_min < 1.0)) {
    throw ArgumentError("alpha1_depolarizing: s_min must lie in (0, 1), got " + std::to_string(s_min));
  }
  // q_{1-s}(x) = q_s(1-x), so both parameterizations share the same minimum.
  const double p = std::min(s_min, 1.0 - s_min);
  const auto objective = [p](double x) { return finite_or_huge(q_ratio(x, p)); };
  const ScalarMinimum m = minimize_unit_interval(objective);

  Alpha1Result out;
  out.alpha1 = 0.5 * (1.0 + m.value);
  out.argmin_x = p == s_min ? m.x : 1.0 - m.x;
  out.s_min = s_min;
  out.lower_bound = alpha1_lower_bound(s_min);
  out.method = Alpha1Method::closed_form;
  return out;
}

ExtendedReal classical_Q(std::span<const double> r, std::span<const double> s, double proximity_tol) {
  if (r.size() != s.size()) throw ArgumentError("classical_Q: spectra of different length");
  double distance = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) distance += std::abs(r[i] - s[i]);
  if (proximity_tol > 0.0 && distance < proximity_tol) return ExtendedReal::finite(1.0);

  double forward = 0.0, backward = 0.0;  // D(r||s), D(s||r)
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (s[i] <= 0.0) throw PreconditionError("classical_Q requires a full-rank reference spectrum");
    if (r[i] <= 0.0) return ExtendedReal::infinity();
    forward += kl_term(r[i], s[i]);
    backward += kl_term(s[i], r[i]);
  }
  if (forward == 0.0) return ExtendedReal::finite(1.0);
  return ExtendedReal::finite(backward / forward);
}

std::vector<double> polish_commuting_minimizer(std::span<const double> s, std::span<const double> start) {
  const std::size_t d = s.size();
  if (start.size() != d) throw ArgumentError("polish: spectra of different length");
  if (d < 2) return {1.0};
  std::vector<double> z(d - 1);
  const double last = std::log(std::max(start[d - 1], 1e-300) / s[d - 1]);
  for (std::size_t i = 0; i + 1 < d; ++i) z[i] = std::log(std::max(start[i], 1e-300) / s[i]) - last;

  const Objective objective = [&](const std::vector<double>& zz) {
    return finite_or_huge(classical_Q(spectrum_from_log_ratios(s, zz), s, 0.0));
  };
  const int budget = 4000 * static_cast<int>(d);
  z = nelder_mead(objective, z, 0.5, budget);
  z = nelder_mead(objective, z, 0.05, budget);
  return spectrum_from_log_ratios(s, z);
}

Alpha1Result alpha1_bruteforce(const DensityMatrix& sigma, const BruteForceOptions& options) {
  const int d = sigma.dim();
  if (d > options.subset_limit) {
    throw ResourceError("alpha1_bruteforce: dimension " + std::to_string(d) + " exceeds subset limit " +
                        std::to_string(options.subset_limit));
  }
  if (!sigma.is_full_rank()) throw PreconditionError("alpha1_bruteforce requires a full-rank sigma");
  if (d < 2) throw ArgumentError("alpha1_bruteforce requires dimension >= 2");

  const std::vector<double> s = ascending_eigenvalues(sigma);
  Alpha1Result out;
  out.method = Alpha1Method::brute_force;
  out.s_min = s.front();
  out.lower_bound = alpha1_lower_bound(out.s_min);

  // (a) two-block splits. A and its complement give the same minimum, so
  // only subsets without the last index are scanned.
  double best_q = kHuge;
  const unsigned full = 1u << d;
  for (unsigned mask = 1; mask < full / 2; ++mask) {
    double p = 0.0;
    for (int i = 0; i < d; ++i) {
      if (mask & (1u << i)) p += s[i];
    }
    const auto objective = [p](double x) { return finite_or_huge(q_ratio(x, p)); };
    const ScalarMinimum m = zoom_minimize(objective, options.x_grid);
    if (m.value < best_q) {
      best_q = m.value;
      out.argmin_x = m.x;
      out.witness_subset.clear();
      for (int i = 0; i < d; ++i) {
        if (mask & (1u << i)) out.witness_subset.push_back(i);
      }
    }
  }
  out.subset_alpha1 = 0.5 * (1.0 + best_q);

  // (b) random full-rank states, keeping the best one's sigma-basis weights
  // as a starting point for (c).
  double best_sampled = kHuge;
  std::vector<double> best_weights;
  Rng rng(options.seed, static_cast<std::uint64_t>(d));
  for (int k = 0; k < options.random_samples; ++k) {
    const DensityMatrix rho = random_hilbert_schmidt(d, rng);
    const double q = finite_or_huge(Q_ratio(rho, sigma));
    if (q < best_sampled) {
      best_sampled = q;
      const RealVector w =
          (sigma.eigenvectors().adjoint() * rho.matrix() * sigma.eigenvectors()).diagonal().real();
      best_weights.assign(w.data(), w.data() + w.size());
    }
  }

  // (c) local polish over commuting spectra.
  for (int start = 0; start < options.polish_starts; ++start) {
    std::vector<double> init;
    if (start == 0 && !best_weights.empty()) {
      init = best_weights;
    } else {
      const Spectrum drawn = random_spectrum(d, rng);
      init.assign(drawn.values().begin(), drawn.values().end());
    }
    std::vector<double> r = polish_commuting_minimizer(s, init);
    const double q = finite_or_huge(classical_Q(r, s, 0.0));
    if (q < best_sampled || out.minimizer_spectrum.empty()) {
      if (q < best_sampled) best_sampled = q;
      out.minimizer_spectrum = std::move(r);
    }
  }
  out.sampled_alpha1 = best_sampled == kHuge ? kHuge : 0.5 * (1.0 + best_sampled);
  out.alpha1 = std::min(out.subset_alpha1, out.sampled_alpha1);
  return out;
}

ExtendedReal best_commuting_value(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const int d = sigma.dim();
  if (rho.dim() != d) throw ArgumentError("best_commuting_value: dimension mismatch");
  if (d > 8) throw ResourceError("best_commuting_value: permutation search is capped at d = 8");
  if (!sigma.is_full_rank()) throw PreconditionError("best_commuting_value requires a full-rank sigma");

  const std::vector<double> s = ascending_eigenvalues(sigma);
  std::vector<double> r = ascending_eigenvalues(rho);
  std::sort(r.begin(), r.end());
  ExtendedReal best = ExtendedReal::infinity();
  do {
    const ExtendedReal q = classical_Q(r, s);
    if (q < best) best = q;
  } while (std::next_permutation(r.begin(), r.end()));
  return best;
}

bool minimizer_two_ratio_check(std::span<const double> r, std::span<const double> s, double tol) {
  if (r.size() != s.size() || r.empty()) throw ArgumentError("two-ratio check: spectra of different length");
  std::vector<double> u(r.size());
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (!(s[j] > 0.0)) throw PreconditionError("two-ratio check requires a positive reference spectrum");
    u[j] = r[j] / s[j];
  }
  std::sort(u.begin(), u.end());
  if (u.back() - u.front() <= tol) return true;
  for (std::size_t k = 0; k + 1 < u.size(); ++k) {
    if (u[k] - u.front() <= tol && u.back() - u[k + 1] <= tol) return true;
  }
  return false;
}

UnimodalityReport unimodality_scan(double x, int y_grid, double tol) {
  if (!(x > 0.0 && x < 1.0)) throw ArgumentError("unimodality_scan: x must lie in (0, 1)");
  if (y_grid < 1000) throw ArgumentError("unimodality_scan: y_grid must be >= 1000");

  std::vector<double> f(y_grid + 1, 0.0);
  for (int k = 1; k < y_grid; ++k) {
    const double y = static_cast<double>(k) / y_grid;
    f[k] = q_ratio(x, y).value();
  }
  const auto peak = static_cast<int>(std::max_element(f.begin(), f.end()) - f.begin());

  UnimodalityReport out;
  out.m_f = static_cast<double>(peak) / y_grid;
  out.peak_value = f[peak];
  out.endpoint_value = f.front();
  for (int k = 0; k < y_grid; ++k) {
    const double rise = f[k + 1] - f[k];
    const double violation = k < peak ? -rise : rise;
    out.worst_violation = std::max(out.worst_violation, violation);
  }
  out.is_unimodal = out.worst_violation <= tol && peak > 0 && peak < y_grid;
  return out;
}

double mh_objective(double x, double y) { return y * (1.0 - y) / (y * y + x - 2.0 * y * x); }

double mh_formula(double x) {
  if (!(x > 0.5 && x < 1.0)) throw ArgumentError("mh_formula: x must lie in (1/2, 1)");
  return (x - std::sqrt(x * (1.0 - x))) / (2.0 * x - 1.0);
}

}  // namespace lsob
