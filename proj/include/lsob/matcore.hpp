#pragma once

// Dense Hermitian linear algebra for small quantum systems (d <= 64).
//
// All types are immutable values. A DensityMatrix is validated once at
// construction and carries its eigendecomposition, since nearly every
// entropy functional downstream needs it.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace lsob {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kPsdSlack = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kFullRankTol = 1e-12;
inline constexpr std::size_t kDefaultDimCap = 4096;

class HermitianMatrix {
 public:
  /// Symmetrizes (A + A^dagger)/2. Throws ArgumentError if not square or empty.
  explicit HermitianMatrix(ComplexMatrix entries);

  static HermitianMatrix zero(int dim);
  static HermitianMatrix diagonal(std::span<const double> values);

  int dim() const { return static_cast<int>(m_.rows()); }
  const ComplexMatrix& matrix() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }
  double trace() const { return m_.trace().real(); }

  HermitianMatrix operator+(const HermitianMatrix& other) const;
  HermitianMatrix operator-(const HermitianMatrix& other) const;
  HermitianMatrix operator*(double scale) const;

 private:
  ComplexMatrix m_;
};

struct EigenDecomposition {
  RealVector values;     // ascending
  ComplexMatrix vectors;  // orthonormal columns
};

/// Throws ConvergenceError if the solver does not converge.
EigenDecomposition eigh(const HermitianMatrix& h);

/// Probability vector in descending order.
class Spectrum {
 public:
  /// Sorts descending. Entries must lie in [-kPsdSlack, 1] and sum to 1
  /// within kTraceTol; tiny negatives are clamped to zero.
  explicit Spectrum(std::vector<double> values);

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double min() const { return values_.back(); }
  double max() const { return values_.front(); }

 private:
  std::vector<double> values_;
};

class DensityMatrix {
 public:
  /// Validates Hermiticity (kHermitianTol), PSD (eigenvalues >= -kPsdSlack,
  /// small negatives clamped to 0) and unit trace (kTraceTol). Throws
  /// ArgumentError on violation. `local_dims` defaults to {dim}.
  explicit DensityMatrix(ComplexMatrix entries, std::vector<int> local_dims = {});
  explicit DensityMatrix(const HermitianMatrix& h, std::vector<int> local_dims = {});

  static DensityMatrix diagonal(std::span<const double> probabilities,
                                std::vector<int> local_dims = {});
  static DensityMatrix maximally_mixed(int dim);
  /// |psi><psi| / <psi|psi>.
  static DensityMatrix pure(const ComplexVector& psi, std::vector<int> local_dims = {});
  /// sum_i weights[i] |frame_i><frame_i| for orthonormal columns frame_i.
  static DensityMatrix from_frame(const ComplexMatrix& frame, std::span<const double> weights,
                                  std::vector<int> local_dims = {});

  int dim() const { return static_cast<int>(m_.rows()); }
  std::span<const int> local_dims() const { return local_dims_; }
  int num_factors() const { return static_cast<int>(local_dims_.size()); }

  const ComplexMatrix& matrix() const { return m_; }
  HermitianMatrix hermitian() const { return HermitianMatrix(m_); }
  Complex operator()(int i, int j) const { return m_(i, j); }

  /// Ascending eigenvalues, clamped to be nonnegative.
  const RealVector& eigenvalues() const { return evals_; }
  const ComplexMatrix& eigenvectors() const { return evecs_; }
  Spectrum spectrum() const;
  double min_eigenvalue() const { return evals_(0); }
  double max_eigenvalue() const { return evals_(evals_.size() - 1); }
  bool is_full_rank(double tol = kFullRankTol) const { return min_eigenvalue() > tol; }

  DensityMatrix with_local_dims(std::vector<int> local_dims) const;

 private:
  ComplexMatrix m_;
  std::vector<int> local_dims_;
  RealVector evals_;
  ComplexMatrix evecs_;
};

HermitianMatrix operator-(const DensityMatrix& a, const DensityMatrix& b);

/// V diag(log max(lambda_i, floor)) V^dagger.
HermitianMatrix matrix_log(const DensityMatrix& rho, double floor = 1e-300);

/// Reduced state on the factors listed in `keep` (0-based, any order,
/// duplicates rejected). Keeping nothing yields the 1x1 state [1].
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

/// Sum of absolute eigenvalues.
double trace_norm(const HermitianMatrix& a);

/// Kronecker product; local_dims concatenate.
DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b);

/// sigma^{(x) n} with local_dims (dim,)*n. Throws ResourceError if dim^n > cap.
DensityMatrix tensor_power(const DensityMatrix& sigma, int n, std::size_t cap = kDefaultDimCap);

/// (1 - weight) a + weight b.
DensityMatrix mix(const DensityMatrix& a, const DensityMatrix& b, double weight);

/// Checked dim^n, throwing ResourceError when it exceeds cap.
std::size_t checked_power_dim(int dim, int n, std::size_t cap = kDefaultDimCap);

}  // namespace lsob
