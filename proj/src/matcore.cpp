#include "lsob/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "lsob/errors.hpp"

namespace lsob {

namespace {

void require_square(const ComplexMatrix& m) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw ArgumentError("matrix must be square and non-empty, got " + std::to_string(m.rows()) +
                        "x" + std::to_string(m.cols()));
  }
}

std::vector<int> resolve_local_dims(std::vector<int> local_dims, int dim) {
  if (local_dims.empty()) return {dim};
  long long product = 1;
  for (int d : local_dims) {
    if (d <= 0) throw ArgumentError("local dimensions must be positive");
    product *= d;
  }
  if (product != dim) {
    throw ArgumentError("local dimensions multiply to " + std::to_string(product) +
                        ", expected " + std::to_string(dim));
  }
  return local_dims;
}

// Mixed-radix digits of `index` for the given radices, most significant first.
void to_digits(std::size_t index, std::span<const int> radices, std::span<int> digits) {
  for (std::size_t k = radices.size(); k-- > 0;) {
    digits[k] = static_cast<int>(index % radices[k]);
    index /= radices[k];
  }
}

}  // namespace

HermitianMatrix::HermitianMatrix(ComplexMatrix entries) {
  require_square(entries);
  m_ = 0.5 * (entries + entries.adjoint());
}

HermitianMatrix HermitianMatrix::zero(int dim) {
  return HermitianMatrix(ComplexMatrix::Zero(dim, dim));
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m = ComplexMatrix::Zero(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return HermitianMatrix(std::move(m));
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& other) const {
  if (other.dim() != dim()) throw ArgumentError("dimension mismatch in Hermitian sum");
  return HermitianMatrix(m_ + other.m_);
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& other) const {
  if (other.dim() != dim()) throw ArgumentError("dimension mismatch in Hermitian difference");
  return HermitianMatrix(m_ - other.m_);
}

HermitianMatrix HermitianMatrix::operator*(double scale) const { return HermitianMatrix(m_ * scale); }

EigenDecomposition eigh(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("Hermitian eigensolver did not converge (dim " +
                           std::to_string(h.dim()) + ")");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw ArgumentError("spectrum must be non-empty");
  double sum = 0.0;
  for (double& v : values_) {
    if (!std::isfinite(v) || v < -kPsdSlack || v > 1.0 + kTraceTol) {
      throw ArgumentError("spectrum entry out of [0, 1]: " + std::to_string(v));
    }
    v = std::clamp(v, 0.0, 1.0);
    sum += v;
  }
  if (std::abs(sum - 1.0) > kTraceTol) {
    throw ArgumentError("spectrum does not sum to 1 (sum = " + std::to_string(sum) + ")");
  }
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

DensityMatrix::DensityMatrix(ComplexMatrix entries, std::vector<int> local_dims) {
  require_square(entries);
  const double asymmetry = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
  if (asymmetry > kHermitianTol) {
    throw ArgumentError("density matrix is not Hermitian (max deviation " +
                        std::to_string(asymmetry) + ")");
  }
  m_ = 0.5 * (entries + entries.adjoint());
  local_dims_ = resolve_local_dims(std::move(local_dims), dim());

  const double trace = m_.trace().real();
  if (std::abs(trace - 1.0) > kTraceTol) {
    throw ArgumentError("density matrix trace is " + std::to_string(trace) + ", expected 1");
  }

  auto decomposition = eigh(HermitianMatrix(m_));
  evals_ = std::move(decomposition.values);
  evecs_ = std::move(decomposition.vectors);
  if (evals_(0) < -kPsdSlack) {
    throw ArgumentError("density matrix has negative eigenvalue " + std::to_string(evals_(0)));
  }
  if (evals_(0) < 0.0) {
    evals_ = evals_.cwiseMax(0.0);
    m_ = evecs_ * evals_.cast<Complex>().asDiagonal() * evecs_.adjoint();
  }
}

DensityMatrix::DensityMatrix(const HermitianMatrix& h, std::vector<int> local_dims)
    : DensityMatrix(h.matrix(), std::move(local_dims)) {}

DensityMatrix DensityMatrix::diagonal(std::span<const double> probabilities,
                                      std::vector<int> local_dims) {
  return DensityMatrix(HermitianMatrix::diagonal(probabilities), std::move(local_dims));
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  if (dim <= 0) throw ArgumentError("dimension must be positive");
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi, std::vector<int> local_dims) {
  const double norm = psi.norm();
  if (psi.size() == 0 || norm == 0.0) throw ArgumentError("pure state vector must be nonzero");
  const ComplexVector unit = psi / norm;
  return DensityMatrix(ComplexMatrix(unit * unit.adjoint()), std::move(local_dims));
}

DensityMatrix DensityMatrix::from_frame(const ComplexMatrix& frame, std::span<const double> weights,
                                        std::vector<int> local_dims) {
  if (frame.rows() != frame.cols() || static_cast<std::size_t>(frame.cols()) != weights.size()) {
    throw ArgumentError("frame and weight dimensions disagree");
  }
  RealVector w(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) w(i) = weights[i];
  return DensityMatrix(ComplexMatrix(frame * w.cast<Complex>().asDiagonal() * frame.adjoint()),
                       std::move(local_dims));
}

Spectrum DensityMatrix::spectrum() const {
  return Spectrum(std::vector<double>(evals_.data(), evals_.data() + evals_.size()));
}

DensityMatrix DensityMatrix::with_local_dims(std::vector<int> local_dims) const {
  DensityMatrix copy = *this;
  copy.local_dims_ = resolve_local_dims(std::move(local_dims), dim());
  return copy;
}

HermitianMatrix operator-(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw ArgumentError("dimension mismatch in state difference");
  return HermitianMatrix(a.matrix() - b.matrix());
}

HermitianMatrix matrix_log(const DensityMatrix& rho, double floor) {
  if (!(floor > 0.0)) throw ArgumentError("matrix_log floor must be positive");
  const RealVector logs = rho.eigenvalues().unaryExpr([floor](double v) { return std::log(std::max(v, floor)); });
  const auto& v = rho.eigenvectors();
  return HermitianMatrix(ComplexMatrix(v * logs.cast<Complex>().asDiagonal() * v.adjoint()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  const auto dims = rho.local_dims();
  const int n = rho.num_factors();
  std::vector<bool> kept(n, false);
  for (int k : keep) {
    if (k < 0 || k >= n) {
      throw ArgumentError("partial_trace factor " + std::to_string(k) + " out of range [0, " +
                          std::to_string(n) + ")");
    }
    if (kept[k]) throw ArgumentError("partial_trace factor listed twice");
    kept[k] = true;
  }

  std::vector<int> kept_dims, traced_dims;
  for (int i = 0; i < n; ++i) (kept[i] ? kept_dims : traced_dims).push_back(dims[i]);
  const auto product = [](const std::vector<int>& v) {
    return std::accumulate(v.begin(), v.end(), std::size_t{1}, std::multiplies<>());
  };
  const std::size_t kept_size = product(kept_dims);
  const std::size_t traced_size = product(traced_dims);

  // full_index[t * kept_size + k] = position in rho of kept index k, traced index t.
  std::vector<std::size_t> full_index(kept_size * traced_size);
  std::vector<int> digits(n);
  for (std::size_t i = 0; i < static_cast<std::size_t>(rho.dim()); ++i) {
    to_digits(i, dims, digits);
    std::size_t k = 0, t = 0;
    for (int f = 0; f < n; ++f) {
      if (kept[f]) k = k * dims[f] + digits[f];
      else t = t * dims[f] + digits[f];
    }
    full_index[t * kept_size + k] = i;
  }

  ComplexMatrix reduced = ComplexMatrix::Zero(kept_size, kept_size);
  const auto& m = rho.matrix();
  for (std::size_t t = 0; t < traced_size; ++t) {
    const std::size_t* row = &full_index[t * kept_size];
    for (std::size_t a = 0; a < kept_size; ++a) {
      for (std::size_t b = 0; b < kept_size; ++b) reduced(a, b) += m(row[a], row[b]);
    }
  }
  if (kept_dims.empty()) kept_dims.push_back(1);
  return DensityMatrix(std::move(reduced), std::move(kept_dims));
}

double trace_norm(const HermitianMatrix& a) {
  return eigh(a).values.cwiseAbs().sum();
}

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b) {
  const int da = a.dim(), db = b.dim();
  ComplexMatrix out(da * db, da * db);
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) out.block(i * db, j * db, db, db) = a(i, j) * b.matrix();
  }
  std::vector<int> dims(a.local_dims().begin(), a.local_dims().end());
  dims.insert(dims.end(), b.local_dims().begin(), b.local_dims().end());
  return DensityMatrix(std::move(out), std::move(dims));
}

std::size_t checked_power_dim(int dim, int n, std::size_t cap) {
  if (dim <= 0 || n <= 0) throw ArgumentError("dimension and power must be positive");
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::size_t>(dim);
    if (total > cap) {
      throw ResourceError(std::to_string(dim) + "^" + std::to_string(n) + " exceeds dimension cap " +
                          std::to_string(cap));
    }
  }
  return total;
}

DensityMatrix tensor_power(const DensityMatrix& sigma, int n, std::size_t cap) {
  checked_power_dim(sigma.dim(), n, cap);
  const DensityMatrix site = sigma.with_local_dims({sigma.dim()});
  DensityMatrix out = site;
  for (int i = 1; i < n; ++i) out = kron(out, site);
  return out;
}

DensityMatrix mix(const DensityMatrix& a, const DensityMatrix& b, double weight) {
  if (a.dim() != b.dim()) throw ArgumentError("dimension mismatch in mixture");
  if (!(weight >= 0.0 && weight <= 1.0)) throw ArgumentError("mixture weight must lie in [0, 1]");
  std::vector<int> dims(a.local_dims().begin(), a.local_dims().end());
  return DensityMatrix(ComplexMatrix((1.0 - weight) * a.matrix() + weight * b.matrix()),
                       std::move(dims));
}

}  // namespace lsob
