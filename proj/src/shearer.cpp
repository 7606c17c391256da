#include "lsob/shearer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "lsob/depolarize.hpp"
#include "lsob/entropy.hpp"
#include "lsob/errors.hpp"

namespace lsob {

namespace {

void for_each_k_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

double binomial(int n, int k) {
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

void CoverFamily::validate() const {
  if (n < 1) throw ArgumentError("cover family needs n >= 1");
  if (t < 1) throw ArgumentError("cover multiplicity must be >= 1");
  std::vector<int> count(n, 0);
  for (const auto& f : subsets) {
    if (f.empty()) throw ArgumentError("cover family contains an empty subset");
    std::vector<int> sorted = f;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ArgumentError("cover family subset repeats a site");
    }
    for (int i : f) {
      if (i < 0 || i >= n) throw ArgumentError("cover family site out of range: " + std::to_string(i));
      ++count[i];
    }
  }
  for (int i = 0; i < n; ++i) {
    if (count[i] != t) {
      throw ArgumentError("site " + std::to_string(i) + " is covered " + std::to_string(count[i]) +
                          " times, expected exactly " + std::to_string(t));
    }
  }
}

CoverFamily CoverFamily::k_uniform(int n, int k) {
  if (!(k >= 1 && k <= n)) throw ArgumentError("k_uniform requires 1 <= k <= n");
  CoverFamily fam;
  fam.n = n;
  fam.t = static_cast<int>(std::lround(binomial(n - 1, k - 1)));
  for_each_k_subset(n, k, [&](const std::vector<int>& s) { fam.subsets.push_back(s); });
  return fam;
}

CoverFamily CoverFamily::random_exact_cover(int n, int t, Rng& rng) {
  if (n < 1 || t < 1) throw ArgumentError("random_exact_cover requires n, t >= 1");
  CoverFamily fam;
  fam.n = n;
  fam.t = t;
  for (int round = 0; round < t; ++round) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    // Each of the n-1 gaps is a cut with probability 1/2.
    std::vector<int> block{perm[0]};
    for (int i = 1; i < n; ++i) {
      if (rng.below(2) == 1) {
        std::sort(block.begin(), block.end());
        fam.subsets.push_back(block);
        block.clear();
      }
      block.push_back(perm[i]);
    }
    std::sort(block.begin(), block.end());
    fam.subsets.push_back(block);
  }
  return fam;
}

double subset_entropy(const DensityMatrix& rho, std::span<const int> subset) {
  if (subset.empty()) throw ArgumentError("subset_entropy: subset must be nonempty");
  for (int i : subset) {
    if (i < 0 || i >= rho.num_factors()) throw ArgumentError("subset_entropy: site out of range");
  }
  return von_neumann_entropy(partial_trace(rho, subset));
}

double shearer_slack(const DensityMatrix& rho, const CoverFamily& family) {
  family.validate();
  if (family.n != rho.num_factors()) throw ArgumentError("shearer_slack: family size does not match the state");
  double sum = 0.0;
  for (const auto& f : family.subsets) sum += subset_entropy(rho, f);
  return sum / family.t - von_neumann_entropy(rho);
}

double k_uniform_slack(const DensityMatrix& rho, int k) {
  const int n = rho.num_factors();
  if (!(k >= 1 && k <= n)) throw ArgumentError("k_uniform_slack requires 1 <= k <= n");
  const double total = von_neumann_entropy(rho);
  if (k == n) return total - total;
  double sum = 0.0;
  for_each_k_subset(n, k, [&](const std::vector<int>& s) { sum += subset_entropy(rho, s); });
  return sum / binomial(n, k) - (static_cast<double>(k) / n) * total;
}

double theorem3_slack(const DensityMatrix& sigma, const DensityMatrix& rho, double t, int n) {
  if (!(t >= 0.0)) throw ArgumentError("theorem3_slack requires t >= 0");
  if (n < 1) throw ArgumentError("theorem3_slack requires n >= 1");
  const std::size_t expected = checked_power_dim(sigma.dim(), n, kDefaultDimCap);
  if (static_cast<std::size_t>(rho.dim()) != expected) throw ArgumentError("theorem3_slack: dimension mismatch");
  const DensityMatrix sites = rho.num_factors() == n ? rho : rho.with_local_dims(std::vector<int>(n, sigma.dim()));
  const DensityMatrix evolved = tensor_semigroup_apply(sigma, t, n, sites);
  const double decay = std::exp(-t);
  return von_neumann_entropy(evolved) - decay * von_neumann_entropy(rho) +
         std::expm1(-t) * n * von_neumann_entropy(sigma);
}

}  // namespace lsob
