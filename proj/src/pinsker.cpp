#include "lsob/pinsker.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "lsob/errors.hpp"

namespace lsob {

namespace {

constexpr int kExhaustiveLimit = 24;
constexpr int kDpLimit = 255;
constexpr double kTieTol = 1e-14;

std::vector<double> descending(const DensityMatrix& sigma) {
  const Spectrum spectrum = sigma.spectrum();
  const auto v = spectrum.values();
  return {v.begin(), v.end()};
}

std::vector<int> mask_indices(std::uint32_t mask, int d) {
  std::vector<int> out;
  for (int i = 0; i < d; ++i) {
    if (mask & (1u << i)) out.push_back(i);
  }
  return out;
}

BalanceResult balance_exhaustive(std::span<const double> s, BalanceMode mode) {
  const int d = static_cast<int>(s.size());
  BalanceResult best{-1.0, {}};
  int best_size = 0;
  for (std::uint32_t mask = 1; mask < (1u << d); ++mask) {
    double p = 0.0;
    for (int i = 0; i < d; ++i) {
      if (mask & (1u << i)) p += s[i];
    }
    const double value = mode == BalanceMode::literal ? std::min(0.5, p) : std::min(p, 1.0 - p);
    const int size = std::popcount(mask);
    const bool better = value > best.pi + kTieTol;
    const bool tie = std::abs(value - best.pi) <= kTieTol;
    if (better || (tie && size < best_size) ||
        (tie && size == best_size && mask_indices(mask, d) < best.subset)) {
      best.pi = value;
      best.subset = mask_indices(mask, d);
      best_size = size;
    }
  }
  return best;
}

// Subset-sum DP on eigenvalues rounded to multiples of resolution / d, so
// the accumulated rounding error of any subset stays below resolution.
BalanceResult balance_dp(std::span<const double> s, double resolution) {
  const int d = static_cast<int>(s.size());
  if (d > kDpLimit) throw ResourceError("balance_pi: dynamic program is capped at 255 eigenvalues");
  if (!(resolution > 0.0)) throw ArgumentError("balance_pi: resolution must be positive");
  const double unit = resolution / d;
  std::vector<std::int64_t> w(d);
  std::int64_t total = 0;
  for (int i = 0; i < d; ++i) {
    w[i] = std::llround(s[i] / unit);
    total += w[i];
  }
  const std::int64_t half = total / 2;
  // pred[v] = 1 + index of the item that first reached sum v; 0 = unreached.
  std::vector<std::uint8_t> pred(static_cast<std::size_t>(half) + 1, 0);
  std::vector<bool> reached(static_cast<std::size_t>(half) + 1, false);
  reached[0] = true;
  for (int i = 0; i < d; ++i) {
    for (std::int64_t v = half; v >= w[i]; --v) {
      if (!reached[v] && reached[v - w[i]]) {
        reached[v] = true;
        pred[v] = static_cast<std::uint8_t>(i + 1);
      }
    }
  }
  std::int64_t v = half;
  while (v > 0 && !reached[v]) --v;

  std::vector<int> subset;
  while (v > 0) {
    const int i = pred[v] - 1;
    subset.push_back(i);
    v -= w[i];
  }
  if (subset.empty()) subset.push_back(0);
  std::sort(subset.begin(), subset.end());
  double p = 0.0;
  for (int i : subset) p += s[i];
  return {std::min(p, 1.0 - p), std::move(subset)};
}

}  // namespace

double phi(double p) {
  if (!(p > 0.0 && p <= 0.5)) throw ArgumentError("phi: p must lie in (0, 1/2], got " + std::to_string(p));
  const double e = 1.0 - 2.0 * p;
  if (e == 0.0) return 2.0;
  // log((1 - p) / p) = 2 atanh(e); atanh keeps precision near p = 1/2.
  if (e < 0.5) return 2.0 * std::atanh(e) / e;
  return std::log((1.0 - p) / p) / e;
}

BalanceResult balance_pi(const Spectrum& spectrum, BalanceMethod method, double resolution, BalanceMode mode) {
  const auto s = spectrum.values();
  const int d = static_cast<int>(s.size());
  if (method == BalanceMethod::automatic) {
    method = d <= kExhaustiveLimit ? BalanceMethod::exhaustive : BalanceMethod::dp;
  }
  if (method == BalanceMethod::exhaustive) {
    if (d > kExhaustiveLimit) throw ResourceError("balance_pi: exhaustive search is capped at 24 eigenvalues");
    return balance_exhaustive(s, mode);
  }
  if (mode == BalanceMode::literal) return {0.5, {0}};
  return balance_dp(s, resolution);
}

PinskerReport pinsker_report(const Spectrum& spectrum, BalanceMode mode) {
  BalanceResult balance = balance_pi(spectrum, BalanceMethod::automatic, 1e-6, mode);
  if (!(balance.pi > 0.0)) throw PreconditionError("balance coefficient is zero (pure state)");
  PinskerReport out;
  out.pi_sigma = balance.pi;
  out.phi_value = phi(balance.pi);
  out.constant = out.phi_value / 4.0;
  out.witness_subset = std::move(balance.subset);
  return out;
}

PinskerReport improved_pinsker_constant(const DensityMatrix& sigma) {
  if (!sigma.is_full_rank()) throw PreconditionError("improved Pinsker constant requires a full-rank sigma");
  return pinsker_report(sigma.spectrum());
}

DensityMatrix two_block_state(const DensityMatrix& sigma, std::span<const int> subset, double shift) {
  const std::vector<double> s = descending(sigma);
  const int d = sigma.dim();
  std::vector<bool> in(d, false);
  double p = 0.0;
  for (int i : subset) {
    if (i < 0 || i >= d) throw ArgumentError("two_block_state: subset index out of range");
    in[i] = true;
    p += s[i];
  }
  if (!(p > 0.0 && p < 1.0)) throw ArgumentError("two_block_state: subset weight must lie in (0, 1)");
  if (!(p + shift >= 0.0 && p + shift <= 1.0)) throw ArgumentError("two_block_state: shifted weight leaves [0, 1]");

  // Descending spectrum index i sits on eigenvector column d-1-i.
  std::vector<double> weights(d);
  for (int i = 0; i < d; ++i) {
    weights[d - 1 - i] = in[i] ? (p + shift) * s[i] / p : (1.0 - p - shift) * s[i] / (1.0 - p);
  }
  std::vector<int> dims(sigma.local_dims().begin(), sigma.local_dims().end());
  return DensityMatrix::from_frame(sigma.eigenvectors(), weights, std::move(dims));
}

DistanceMinimum min_relent_at_distance(const DensityMatrix& sigma, double epsilon) {
  if (!sigma.is_full_rank()) throw PreconditionError("min_relent_at_distance requires a full-rank sigma");
  if (!(epsilon > 0.0 && epsilon <= 2.0)) throw ArgumentError("epsilon must lie in (0, 2]");
  const std::vector<double> s = descending(sigma);
  const int d = static_cast<int>(s.size());
  if (d > kExhaustiveLimit) throw ResourceError("min_relent_at_distance: subset search capped at 24");

  DistanceMinimum best;
  for (std::uint32_t mask = 1; mask + 1 < (1u << d); ++mask) {
    double p = 0.0;
    for (int i = 0; i < d; ++i) {
      if (mask & (1u << i)) p += s[i];
    }
    if (p + epsilon / 2.0 >= 1.0) continue;
    const ExtendedReal value = ExtendedReal::finite(binary_relative_entropy(p + epsilon / 2.0, p));
    if (value < best.value) {
      best.value = value;
      best.subset = mask_indices(mask, d);
      best.block_weight = p;
    }
  }
  return best;
}

std::vector<TightnessEntry> tightness_sequence(const DensityMatrix& sigma, std::span<const double> epsilons) {
  if (!sigma.is_full_rank()) throw PreconditionError("tightness_sequence requires a full-rank sigma");
  const Spectrum spectrum = sigma.spectrum();
  const BalanceResult balance = balance_pi(spectrum);
  const int d = sigma.dim();

  // Use the side of the split that carries weight pi <= 1/2.
  std::vector<int> block = balance.subset;
  double p = 0.0;
  for (int i : block) p += spectrum[i];
  if (p > 0.5) {
    std::vector<int> complement;
    for (int i = 0; i < d; ++i) {
      if (!std::binary_search(block.begin(), block.end(), i)) complement.push_back(i);
    }
    block = std::move(complement);
    p = 1.0 - p;
  }

  std::vector<TightnessEntry> out;
  for (double eps : epsilons) {
    if (!(eps > 0.0) || p + eps > 1.0) {
      out.push_back({eps, 2.0 * eps, std::nullopt});
      continue;
    }
    const DensityMatrix rho = two_block_state(sigma, block, eps);
    const double distance = trace_norm(rho - sigma);
    const double d_rel = relative_entropy(rho, sigma).value();
    out.push_back({eps, distance, d_rel / (distance * distance)});
  }
  return out;
}

double mixing_time_bound(const DensityMatrix& sigma, double alpha, double t) {
  if (!sigma.is_full_rank()) throw PreconditionError("mixing_time_bound requires a full-rank sigma");
  if (!(alpha > 0.0)) throw ArgumentError("alpha must be positive");
  if (!(t >= 0.0)) throw ArgumentError("t must be nonnegative");
  const PinskerReport report = improved_pinsker_constant(sigma);
  return 2.0 * std::exp(-alpha * t) * std::sqrt(-std::log(sigma.min_eigenvalue()) / report.phi_value);
}

}  // namespace lsob
