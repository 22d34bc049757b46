#pragma once

#include <utility>
#include <vector>

#include "qtsallis/linalg.hpp"

namespace qtsallis {

/// Classical joint distribution p_{jkl} on a (d1,d2,d3) index grid,
/// stored flat in row-major order: index = (j*d2 + k)*d3 + l. The flat
/// order matches the diagonal of the tensor-product basis, so the
/// diagonal embedding commutes with taking marginals / partial traces.
class ProbabilityTensor {
 public:
  /// Validates nonnegativity (entries below -1e-10 rejected, roundoff
  /// negatives clamped to 0) and normalization sum = 1 +- 1e-12.
  ProbabilityTensor(Dims3 dims, std::vector<double> weights);

  const Dims3& dims() const { return dims_; }
  const std::vector<double>& weights() const { return p_; }
  double at(Eigen::Index j, Eigen::Index k, Eigen::Index l) const;

  /// p_{jk} = sum_l p_{jkl}, flat index j*d2 + k.
  std::vector<double> marginal_12() const;
  /// p_{kl} = sum_j p_{jkl}, flat index k*d3 + l.
  std::vector<double> marginal_23() const;
  /// p_k = sum_{j,l} p_{jkl}.
  std::vector<double> marginal_2() const;

  /// Diag(p) as a quantum state on the same factor dimensions.
  TripartiteState diagonal_embedding() const;

 private:
  Dims3 dims_;
  std::vector<double> p_;
};

/// S_q from a (clamped, nonnegative) spectrum: sum_j Ln_q(lambda_j).
/// Zero eigenvalues contribute 0 for every q > 0.
double tsallis_entropy(const RealVector& spectrum, double q);
double tsallis_entropy(const DensityMatrix& d, double q);

/// Tr D^q = sum_j lambda_j^q; the q-norm form ||D||_q^q.
double trace_power(const DensityMatrix& d, double q);

/// S_q of a classical distribution (or marginal): sum_i Ln_q(p_i).
double classical_tsallis_entropy(const std::vector<double>& p, double q);

/// Pseudo-additivity on product states: returns
///   (S_q(rho (x) sigma),  S_q(rho) + S_q(sigma) + (1-q) S_q(rho) S_q(sigma)).
std::pair<double, double> product_additivity_check(const DensityMatrix& rho,
                                                   const DensityMatrix& sigma,
                                                   double q);

/// S_q(D_1) + S_q(D_2) - S_q(D). For q > 1 the value is cross-checked
/// against the equivalent q-norm form
///   (1 + Tr D^q - Tr D_1^q - Tr D_2^q) / (q - 1)
/// and a disagreement beyond 1e-10 raises std::logic_error.
double subadditivity_gap(const BipartiteState& s, double q);

/// The q-norm form of the gap on its own; requires |q - 1| beyond the
/// q=1 branch window.
double subadditivity_gap_qnorm(const BipartiteState& s, double q);

}  // namespace qtsallis
