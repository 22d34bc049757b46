#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <memory>
#include <vector>

#include "qtsallis/qcalculus.hpp"

namespace qtsallis {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Hermiticity / trace / PSD validation tolerance for states.
inline constexpr double kStateTol = 1e-10;

/// Eigenvalues of nominally-PSD matrices inside [-1e-10, 1e-12] are
/// clamped to exactly 0; anything more negative is rejected as non-PSD.
inline constexpr double kEigClampNeg = -1e-10;
inline constexpr double kEigClampPos = 1e-12;

/// Strict-positivity threshold: relative quasi-entropies require the
/// first argument to have all eigenvalues above this.
inline constexpr double kStrictPositiveMin = 1e-12;

double frobenius_norm(const ComplexMatrix& m);

/// ||M - M*||_F <= 1e-10 * max(1, ||M||_F)
bool is_hermitian(const ComplexMatrix& m, double tol = kStateTol);

/// Kronecker product; dimensions multiply.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Partial trace of a matrix on a tensor product of factors with the
/// given dimensions. `keep` lists the (0-based, strictly increasing)
/// factors to retain; it must be a nonempty proper subset. Works on
/// arbitrary matrices, not just states.
ComplexMatrix partial_trace(const ComplexMatrix& m,
                            const std::vector<Eigen::Index>& dims,
                            const std::vector<int>& keep);

/// Eigenvalues descending with phase-fixed eigenvector columns: each
/// column is rotated so that its first component of nonnegligible
/// magnitude is real and positive, making repeated runs reproducible.
struct SpectralDecomposition {
  RealVector eigenvalues;    // descending
  ComplexMatrix eigenvectors;  // orthonormal columns, [:,j] pairs with [j]

  Eigen::Index dim() const { return eigenvalues.size(); }
};

/// Hermitian eigendecomposition. Throws std::invalid_argument if the
/// input is not square or not Hermitian within tolerance.
SpectralDecomposition hermitian_eig(const ComplexMatrix& m);

/// Clamps nominally-PSD eigenvalues: values in [-1e-10, 1e-12] become 0;
/// values below -1e-10 raise std::invalid_argument (matrix not PSD).
RealVector clamp_spectrum(const RealVector& eigenvalues);

/// f applied to a Hermitian PSD matrix in its eigenbasis. The spectrum is
/// clamped first; f undefined at a surviving eigenvalue raises
/// std::domain_error naming the eigenvalue.
ComplexMatrix spectral_apply(const QScalarFunction& f, const ComplexMatrix& m);

/// tr f(rho) g(sigma) via the double spectral sum
///   sum_{j,k} f(lambda_j) g(mu_k) |<phi_j|psi_k>|^2 .
double trace_pairing(const QScalarFunction& f, const QScalarFunction& g,
                     const ComplexMatrix& rho, const ComplexMatrix& sigma);

/// ||AB - BA||_F
double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b);

/// Hermitian, positive semidefinite, unit-trace matrix.
class DensityMatrix {
 public:
  /// Validates Hermiticity, positivity (min eigenvalue >= -1e-10) and
  /// unit trace (|tr - 1| <= 1e-10); throws std::invalid_argument.
  explicit DensityMatrix(ComplexMatrix m);

  const ComplexMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

  /// Clamped eigenvalues, descending (computed once, cached).
  const RealVector& spectrum() const;
  const SpectralDecomposition& decomposition() const;

  double min_eigenvalue() const;
  bool strictly_positive(double floor = kStrictPositiveMin) const;

  static DensityMatrix maximally_mixed(Eigen::Index dim);
  static DensityMatrix pure(const ComplexVector& psi);

 private:
  ComplexMatrix m_;
  mutable std::shared_ptr<const SpectralDecomposition> eig_;
};

struct Dims3 {
  Eigen::Index d1 = 1, d2 = 1, d3 = 1;
  Eigen::Index total() const { return d1 * d2 * d3; }
  bool operator==(const Dims3&) const = default;
};

/// State on H1 (x) H2 with recorded factor dimensions.
class BipartiteState {
 public:
  BipartiteState(Eigen::Index d1, Eigen::Index d2, DensityMatrix state);

  Eigen::Index d1() const { return d1_; }
  Eigen::Index d2() const { return d2_; }
  const DensityMatrix& state() const { return state_; }

  DensityMatrix reduced_1() const;
  DensityMatrix reduced_2() const;

 private:
  Eigen::Index d1_, d2_;
  DensityMatrix state_;
};

/// State on H1 (x) H2 (x) H3 with recorded factor dimensions.
class TripartiteState {
 public:
  TripartiteState(Dims3 dims, DensityMatrix state);

  const Dims3& dims() const { return dims_; }
  const DensityMatrix& state() const { return state_; }

  DensityMatrix reduced(const std::vector<int>& keep) const;
  DensityMatrix reduced_12() const { return reduced({0, 1}); }
  DensityMatrix reduced_23() const { return reduced({1, 2}); }
  DensityMatrix reduced_1() const { return reduced({0}); }
  DensityMatrix reduced_2() const { return reduced({1}); }
  DensityMatrix reduced_3() const { return reduced({2}); }

 private:
  Dims3 dims_;
  DensityMatrix state_;
};

}  // namespace qtsallis
