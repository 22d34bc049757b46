#pragma once

#include "qtsallis/linalg.hpp"
#include "qtsallis/qcalculus.hpp"

namespace qtsallis {

/// Largest dimension the superoperator oracle accepts (it materializes a
/// dim^2 x dim^2 matrix; validation-scale only).
inline constexpr Eigen::Index kSuperopOracleMaxDim = 12;

/// Arguments of the relative quasi-entropy S_f^A(rho||sigma).
///
/// rho must be strictly positive definite (the relative modular operator
/// divides by its eigenvalues). sigma is any Hermitian PSD matrix of the
/// same dimension; it need not have unit trace (second arguments of the
/// form rho12 (x) I3 are used verbatim). Scalar-domain questions (zero
/// modular eigenvalues, negative powers) are delegated to f.
struct QuasiEntropyInput {
  DensityMatrix rho;
  ComplexMatrix sigma;
  ComplexMatrix weight;
  QScalarFunction f;

  QuasiEntropyInput(DensityMatrix rho, ComplexMatrix sigma,
                    ComplexMatrix weight, QScalarFunction f);
};

/// Spectral-formula evaluation:
///   S_f^A(rho||sigma) = sum_{j,k} lambda_j f(mu_k/lambda_j)
///                       |<psi_k| A |phi_j>|^2
/// over eigenpairs (lambda_j, phi_j) of rho and (mu_k, psi_k) of sigma.
/// Throws std::domain_error naming (j, k) if f is undefined at a ratio.
double quasi_entropy_spectral(const QuasiEntropyInput& in);

/// Column-stacking matrix of Delta(sigma/rho): X -> sigma X rho^{-1},
/// i.e. kron(transpose(rho^{-1}), sigma) under vec = column stacking.
/// Its spectrum is exactly the ratio set {mu_k / lambda_j}.
ComplexMatrix relative_modular_superoperator(const DensityMatrix& rho,
                                             const ComplexMatrix& sigma);

/// Independent oracle: builds Delta(sigma/rho) explicitly, applies f via
/// the superoperator's own eigendecomposition, and returns
/// <A rho^{1/2}, f(Delta)(A rho^{1/2})> in the Hilbert-Schmidt inner
/// product. Dimension capped at kSuperopOracleMaxDim.
double quasi_entropy_superop_oracle(const QuasiEntropyInput& in);

/// Monotonicity gap under the partial trace over factor 2:
///   S_f^{T (x) I2}(A||B) - S_f^T(A_1||B_1)
/// for bipartite states a, b of equal factor dims and a weight t on
/// factor 1. Nonnegative when f is operator convex (-ln_q, 0 < q <= 2).
double monotonicity_gap(const BipartiteState& a, const BipartiteState& b,
                        const ComplexMatrix& t, const QScalarFunction& f);

/// U(X) = (X A_1^{-1/2} (x) I_2) A^{1/2}, the isometry
/// M_{d1} -> M_{d1 d2} intertwining the relative modular operators.
ComplexMatrix isometry_map(const BipartiteState& a, const ComplexMatrix& x);

/// Adjoint of isometry_map in the Hilbert-Schmidt inner products:
/// U*(Y) = tr_2(Y A^{1/2}) A_1^{-1/2}.
ComplexMatrix isometry_adjoint(const BipartiteState& a,
                               const ComplexMatrix& y);

/// Frobenius residual of the intertwining relation applied to x:
///   || U*( Delta(B/A)( U(x) ) ) - B_1 x A_1^{-1} ||_F ,
/// which vanishes because U* Delta(B/A) U = Delta(B_1/A_1).
double isometry_relation_residual(const BipartiteState& a,
                                  const BipartiteState& b,
                                  const ComplexMatrix& x);

}  // namespace qtsallis
