#include "qtsallis/quasi_entropy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace qtsallis {

namespace {

// Column-stacking vectorization; matches the kron convention of
// relative_modular_superoperator (Eigen stores column-major).
ComplexVector vec(const ComplexMatrix& m) {
  return Eigen::Map<const ComplexVector>(m.data(), m.size());
}

}  // namespace

QuasiEntropyInput::QuasiEntropyInput(DensityMatrix rho_in,
                                     ComplexMatrix sigma_in,
                                     ComplexMatrix weight_in,
                                     QScalarFunction f_in)
    : rho(std::move(rho_in)),
      sigma(std::move(sigma_in)),
      weight(std::move(weight_in)),
      f(std::move(f_in)) {
  if (sigma.rows() != rho.dim() || sigma.cols() != rho.dim()) {
    throw std::invalid_argument("sigma dimension does not match rho");
  }
  if (!is_hermitian(sigma)) {
    throw std::invalid_argument("sigma must be Hermitian");
  }
  if (weight.rows() != rho.dim() || weight.cols() != rho.dim()) {
    throw std::invalid_argument("weight dimension does not match rho");
  }
  if (!rho.strictly_positive()) {
    throw std::invalid_argument(
        "rho must be strictly positive definite (min eigenvalue > 1e-12)");
  }
}

double quasi_entropy_spectral(const QuasiEntropyInput& in) {
  const SpectralDecomposition& rd = in.rho.decomposition();
  const RealVector& lam = in.rho.spectrum();
  SpectralDecomposition sd = hermitian_eig(in.sigma);
  RealVector mu = clamp_spectrum(sd.eigenvalues);

  // overlap(k, j) = <psi_k| A |phi_j>
  ComplexMatrix overlap = sd.eigenvectors.adjoint() * in.weight *
                          rd.eigenvectors;
  double total = 0.0;
  for (Eigen::Index j = 0; j < lam.size(); ++j) {
    for (Eigen::Index k = 0; k < mu.size(); ++k) {
      double ratio = mu[k] / lam[j];
      if (!in.f.defined_at(ratio)) {
        throw std::domain_error(
            in.f.name() + " undefined at modular ratio mu_k/lambda_j = " +
            std::to_string(ratio) + " (j=" + std::to_string(j) +
            ", k=" + std::to_string(k) + ")");
      }
      total += lam[j] * in.f(ratio) * std::norm(overlap(k, j));
    }
  }
  return total;
}

ComplexMatrix relative_modular_superoperator(const DensityMatrix& rho,
                                             const ComplexMatrix& sigma) {
  if (sigma.rows() != rho.dim() || sigma.cols() != rho.dim()) {
    throw std::invalid_argument("sigma dimension does not match rho");
  }
  if (!rho.strictly_positive()) {
    throw std::invalid_argument(
        "rho must be strictly positive definite (min eigenvalue > 1e-12)");
  }
  ComplexMatrix rho_inv =
      spectral_apply(QScalarFunction::power(-1.0), rho.matrix());
  // vec(sigma X rho^{-1}) = (transpose(rho^{-1}) (x) sigma) vec(X).
  return kron(rho_inv.transpose(), sigma);
}

double quasi_entropy_superop_oracle(const QuasiEntropyInput& in) {
  const Eigen::Index n = in.rho.dim();
  if (n > kSuperopOracleMaxDim) {
    throw std::invalid_argument(
        "superoperator oracle limited to dimension <= " +
        std::to_string(kSuperopOracleMaxDim) + ", got " + std::to_string(n));
  }
  ComplexMatrix delta = relative_modular_superoperator(in.rho, in.sigma);
  SpectralDecomposition de = hermitian_eig(delta);

  // The modular spectrum consists of ratios mu/lambda that can be huge,
  // so roundoff negatives are clamped relative to the spectral radius.
  RealVector ev = de.eigenvalues;
  double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i] < kEigClampNeg * scale) {
      throw std::invalid_argument(
          "relative modular operator is not PSD: eigenvalue " +
          std::to_string(ev[i]));
    }
    if (ev[i] <= kEigClampPos) {
      ev[i] = 0.0;
    }
  }
  RealVector fev(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (!in.f.defined_at(ev[i])) {
      throw std::domain_error(in.f.name() +
                              " undefined at modular eigenvalue " +
                              std::to_string(ev[i]));
    }
    fev[i] = in.f(ev[i]);
  }
  ComplexMatrix f_delta =
      de.eigenvectors * fev.asDiagonal() * de.eigenvectors.adjoint();

  ComplexMatrix rho_sqrt =
      spectral_apply(QScalarFunction::power(0.5), in.rho.matrix());
  ComplexVector v = vec(in.weight * rho_sqrt);
  std::complex<double> val = v.dot(f_delta * v);
  if (std::abs(val.imag()) > 1e-12 * std::max(1.0, std::abs(val.real()))) {
    throw std::runtime_error(
        "superoperator quasi-entropy has nonreal value: imaginary part " +
        std::to_string(val.imag()));
  }
  return val.real();
}

double monotonicity_gap(const BipartiteState& a, const BipartiteState& b,
                        const ComplexMatrix& t, const QScalarFunction& f) {
  if (a.d1() != b.d1() || a.d2() != b.d2()) {
    throw std::invalid_argument("bipartite factor dimensions must match");
  }
  if (t.rows() != a.d1() || t.cols() != a.d1()) {
    throw std::invalid_argument("weight must act on factor 1");
  }
  ComplexMatrix lifted =
      kron(t, ComplexMatrix::Identity(a.d2(), a.d2()));
  double whole = quasi_entropy_spectral(
      QuasiEntropyInput(a.state(), b.state().matrix(), lifted, f));
  double part = quasi_entropy_spectral(
      QuasiEntropyInput(a.reduced_1(), b.reduced_1().matrix(), t, f));
  return whole - part;
}

ComplexMatrix isometry_map(const BipartiteState& a, const ComplexMatrix& x) {
  if (x.rows() != a.d1() || x.cols() != a.d1()) {
    throw std::invalid_argument("isometry argument must act on factor 1");
  }
  if (!a.state().strictly_positive()) {
    throw std::invalid_argument("state must be strictly positive definite");
  }
  ComplexMatrix a_sqrt =
      spectral_apply(QScalarFunction::power(0.5), a.state().matrix());
  ComplexMatrix a1_inv_sqrt =
      spectral_apply(QScalarFunction::power(-0.5), a.reduced_1().matrix());
  return kron(x * a1_inv_sqrt,
              ComplexMatrix::Identity(a.d2(), a.d2())) *
         a_sqrt;
}

ComplexMatrix isometry_adjoint(const BipartiteState& a,
                               const ComplexMatrix& y) {
  if (y.rows() != a.state().dim() || y.cols() != a.state().dim()) {
    throw std::invalid_argument("adjoint argument must act on the product");
  }
  if (!a.state().strictly_positive()) {
    throw std::invalid_argument("state must be strictly positive definite");
  }
  ComplexMatrix a_sqrt =
      spectral_apply(QScalarFunction::power(0.5), a.state().matrix());
  ComplexMatrix a1_inv_sqrt =
      spectral_apply(QScalarFunction::power(-0.5), a.reduced_1().matrix());
  return partial_trace(y * a_sqrt, {a.d1(), a.d2()}, {0}) * a1_inv_sqrt;
}

double isometry_relation_residual(const BipartiteState& a,
                                  const BipartiteState& b,
                                  const ComplexMatrix& x) {
  if (a.d1() != b.d1() || a.d2() != b.d2()) {
    throw std::invalid_argument("bipartite factor dimensions must match");
  }
  ComplexMatrix ux = isometry_map(a, x);
  ComplexMatrix a_inv =
      spectral_apply(QScalarFunction::power(-1.0), a.state().matrix());
  // Delta(B/A) applied to U(x), pulled back by U*.
  ComplexMatrix lhs =
      isometry_adjoint(a, b.state().matrix() * ux * a_inv);
  ComplexMatrix a1_inv =
      spectral_apply(QScalarFunction::power(-1.0), a.reduced_1().matrix());
  ComplexMatrix rhs = b.reduced_1().matrix() * x * a1_inv;
  return (lhs - rhs).norm();
}

}  // namespace qtsallis
