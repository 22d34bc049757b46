#include "qtsallis/ssa.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtsallis {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// One near-degenerate eigenvalue group with its eigenprojector.
struct EigCluster {
  double value = 0.0;
  ComplexMatrix projector;
};

// Groups eigenvalues (descending on input) that agree to 1e-8 relative
// and sums the corresponding rank-1 projectors, so that overlap tests
// are stable under degeneracy.
std::vector<EigCluster> cluster_spectrum(const SpectralDecomposition& sd,
                                         double rel_tol = 1e-8) {
  std::vector<EigCluster> clusters;
  const Eigen::Index n = sd.dim();
  Eigen::Index start = 0;
  while (start < n) {
    double head = sd.eigenvalues[start];
    Eigen::Index end = start + 1;
    while (end < n &&
           head - sd.eigenvalues[end] <= rel_tol * std::max(1.0, std::abs(head))) {
      ++end;
    }
    ComplexMatrix cols = sd.eigenvectors.middleCols(start, end - start);
    double mean = 0.0;
    for (Eigen::Index i = start; i < end; ++i) {
      mean += sd.eigenvalues[i];
    }
    clusters.push_back({mean / static_cast<double>(end - start),
                        cols * cols.adjoint()});
    start = end;
  }
  return clusters;
}

// U = rho^{(q-1)/2} style weights used by both theorem checks.
ComplexMatrix half_power_weight(const ComplexMatrix& m, double q) {
  return spectral_apply(QScalarFunction::power((q - 1.0) / 2.0), m);
}

void require_strictly_positive(const TripartiteState& t, const char* who) {
  if (!t.state().strictly_positive()) {
    throw std::invalid_argument(std::string(who) +
                                " requires a strictly positive state; "
                                "regularize singular states first");
  }
}

}  // namespace

double ssa_deficit(const TripartiteState& t, double q) {
  return tsallis_entropy(t.reduced_12(), q) +
         tsallis_entropy(t.reduced_23(), q) -
         tsallis_entropy(t.state(), q) - tsallis_entropy(t.reduced_2(), q);
}

TripartiteState regularize(const TripartiteState& t, double eps) {
  if (!(eps > 0.0) || eps >= 1.0) {
    throw std::invalid_argument("regularization weight must be in (0,1)");
  }
  const Eigen::Index d = t.state().dim();
  ComplexMatrix m = (1.0 - eps) * t.state().matrix() +
                    (eps / static_cast<double>(d)) *
                        ComplexMatrix::Identity(d, d);
  return TripartiteState(t.dims(), DensityMatrix(std::move(m)));
}

Thm1Forms thm1_forms(const TripartiteState& t, double q) {
  require_strictly_positive(t, "thm1_forms");
  const Dims3& dm = t.dims();
  QScalarFunction f = QScalarFunction::neg_ln_q(q);

  ComplexMatrix u = half_power_weight(t.state().matrix(), q);
  ComplexMatrix sigma123 =
      kron(t.reduced_12().matrix(), ComplexMatrix::Identity(dm.d3, dm.d3));
  double lhs = quasi_entropy_spectral(
      QuasiEntropyInput(t.state(), std::move(sigma123), std::move(u), f));

  DensityMatrix rho23 = t.reduced_23();
  ComplexMatrix v = half_power_weight(rho23.matrix(), q);
  ComplexMatrix sigma23 =
      kron(t.reduced_2().matrix(), ComplexMatrix::Identity(dm.d3, dm.d3));
  double rhs = quasi_entropy_spectral(QuasiEntropyInput(
      std::move(rho23), std::move(sigma23), std::move(v), f));
  return {lhs, rhs};
}

Thm2Check thm2_check(const TripartiteState& t, double q) {
  if (!(q > 0.0) || q > kOperatorConvexQMax) {
    throw std::invalid_argument(
        "thm2_check requires 0 < q <= 2 (operator-convexity window), got " +
        std::to_string(q));
  }
  require_strictly_positive(t, "thm2_check");
  const Dims3& dm = t.dims();
  QScalarFunction f = QScalarFunction::ln_q(q);
  QScalarFunction neg = QScalarFunction::neg_ln_q(q);
  QScalarFunction sqrt_fn = QScalarFunction::power(0.5);

  // Weights (-ln_q rho)^{1/2}; -ln_q is nonnegative on (0, 1].
  ComplexMatrix w123 =
      spectral_apply(sqrt_fn, spectral_apply(neg, t.state().matrix()));
  DensityMatrix rho23 = t.reduced_23();
  ComplexMatrix w23 =
      spectral_apply(sqrt_fn, spectral_apply(neg, rho23.matrix()));

  ComplexMatrix sigma123 =
      kron(t.reduced_12().matrix(), ComplexMatrix::Identity(dm.d3, dm.d3));
  ComplexMatrix sigma23 =
      kron(t.reduced_2().matrix(), ComplexMatrix::Identity(dm.d3, dm.d3));

  double big = quasi_entropy_spectral(
      QuasiEntropyInput(t.state(), std::move(sigma123), std::move(w123), f));
  double small = quasi_entropy_spectral(QuasiEntropyInput(
      std::move(rho23), std::move(sigma23), std::move(w23), f));
  return {ssa_deficit(t, q), (q - 1.0) * (big - small)};
}

Thm3Conditions thm3_conditions(const TripartiteState& t, double tol_commute,
                               double tol_overlap) {
  const Dims3& dm = t.dims();
  Thm3Conditions out;

  ComplexMatrix lift23 = kron(ComplexMatrix::Identity(dm.d1, dm.d1),
                              t.reduced_23().matrix());
  out.commutator = commutator_norm(t.state().matrix(), lift23);
  out.commutes = out.commutator <= tol_commute;

  // (ii): lambda <= mu across overlapping eigenspaces of rho123 and
  // rho12 (x) I3.
  ComplexMatrix lift12 = kron(t.reduced_12().matrix(),
                              ComplexMatrix::Identity(dm.d3, dm.d3));
  std::vector<EigCluster> lam = cluster_spectrum(t.state().decomposition());
  std::vector<EigCluster> mu = cluster_spectrum(hermitian_eig(lift12));
  out.overlap_dominance = true;
  for (const EigCluster& l : lam) {
    for (const EigCluster& m : mu) {
      if ((m.projector * l.projector).norm() > tol_overlap &&
          l.value > m.value + tol_overlap) {
        out.overlap_dominance = false;
      }
    }
  }

  // (iii): rho123 <= I1 (x) rho23.
  SpectralDecomposition gap = hermitian_eig(lift23 - t.state().matrix());
  out.dominance_min_eig = gap.eigenvalues[gap.dim() - 1];
  out.operator_dominance = out.dominance_min_eig >= -tol_overlap;

  out.dominance = out.overlap_dominance && out.operator_dominance;
  out.satisfied = out.commutes && out.dominance;

  out.grid_min_deficit = kNan;
  if (out.satisfied) {
    double worst = std::numeric_limits<double>::infinity();
    for (double q : kThm3QGrid) {
      worst = std::min(worst, ssa_deficit(t, q));
    }
    out.grid_min_deficit = worst;
    if (worst < kViolationThreshold) {
      throw std::logic_error(
          "sufficient condition held but the deficit reached " +
          std::to_string(worst) + " on the q grid");
    }
  }
  return out;
}

ViolationBound violation_upper_bound(const TripartiteState& t, double q) {
  if (!(q > 1.0)) {
    throw std::invalid_argument(
        "violation_upper_bound requires q > 1 (subadditivity regime)");
  }
  const Dims3& dm = t.dims();
  double s1 = tsallis_entropy(t.reduced_1(), q);
  double s2 = tsallis_entropy(t.reduced_2(), q);
  double s3 = tsallis_entropy(t.reduced_3(), q);
  double s12 = tsallis_entropy(t.reduced_12(), q);
  double s23 = tsallis_entropy(t.reduced_23(), q);

  ViolationBound out;
  out.min_expr = std::min(s1 + s2 - s12, s2 + s3 - s23);
  double d2_term = -ln_q(1.0 / static_cast<double>(dm.d2), q);
  out.dim_bound =
      d2_term - ln_q(1.0 / static_cast<double>(std::min(dm.d1, dm.d3)), q);
  out.dim_bound_alt =
      d2_term - ln_q(1.0 / static_cast<double>(std::min(dm.d1, dm.d2)), q);
  return out;
}

double classical_ssa_check(const ProbabilityTensor& p, double q) {
  if (q < 1.0) {
    throw std::invalid_argument(
        "classical_ssa_check requires q >= 1 (no guarantee below)");
  }
  return classical_tsallis_entropy(p.marginal_12(), q) +
         classical_tsallis_entropy(p.marginal_23(), q) -
         classical_tsallis_entropy(p.weights(), q) -
         classical_tsallis_entropy(p.marginal_2(), q);
}

TripartiteState example_proposition() {
  ComplexMatrix m = ComplexMatrix::Zero(8, 8);
  // Two 2x2 blocks of 1/4 straddling rows/cols {2,4} and {3,5}.
  for (Eigen::Index a : {2, 4}) {
    for (Eigen::Index b : {2, 4}) {
      m(a, b) = 0.25;
    }
  }
  for (Eigen::Index a : {3, 5}) {
    for (Eigen::Index b : {3, 5}) {
      m(a, b) = 0.25;
    }
  }
  return TripartiteState({2, 2, 2}, DensityMatrix(std::move(m)));
}

BipartiteState bell_pair() {
  ComplexVector psi = ComplexVector::Zero(4);
  psi[0] = psi[3] = 1.0 / std::sqrt(2.0);
  return BipartiteState(2, 2, DensityMatrix::pure(psi));
}

TripartiteState example_entangled_product(const BipartiteState& rho12,
                                          const DensityMatrix& rho3) {
  const RealVector& lam12 = rho12.state().spectrum();
  if (lam12[0] < 1.0 - 1e-9) {
    throw std::invalid_argument("rho12 must be a pure state");
  }
  if (tsallis_entropy(rho12.reduced_2(), 2.0) <= 1e-12) {
    throw std::invalid_argument("rho12 must be entangled");
  }
  if (rho3.dim() < 2 || rho3.spectrum()[1] <= 1e-12) {
    throw std::invalid_argument("rho3 must have rank > 1");
  }
  return TripartiteState(
      {rho12.d1(), rho12.d2(), rho3.dim()},
      DensityMatrix(kron(rho12.state().matrix(), rho3.matrix())));
}

TripartiteState example_bell_family(double p, double r, double theta,
                                    const DensityMatrix& rho1) {
  const double slack = 1e-12;
  if (p < 0.5 - slack || p > 1.0 + slack || r < 0.5 - slack ||
      r > 1.0 + slack) {
    throw std::invalid_argument("parameters must lie in [1/2, 1]");
  }
  if (p * r > 1.0 - r + slack) {
    throw std::invalid_argument("parameters must satisfy p*r <= 1-r");
  }
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  ComplexMatrix v = ComplexMatrix::Zero(4, 4);
  v(0, 0) = c;
  v(3, 0) = s;
  v(1, 1) = c;
  v(2, 1) = s;
  v(1, 2) = -s;
  v(2, 2) = c;
  v(0, 3) = -s;
  v(3, 3) = c;
  RealVector lambda(4);
  lambda << p * r, (1.0 - p) * r, p * (1.0 - r), (1.0 - p) * (1.0 - r);
  ComplexMatrix rho23 = v * lambda.asDiagonal() * v.transpose();
  return TripartiteState({rho1.dim(), 2, 2},
                         DensityMatrix(kron(rho1.matrix(), rho23)));
}

std::pair<double, double> example_diag4(double a, double b, double c,
                                        double d, double q) {
  if (q < 1.0) {
    throw std::invalid_argument("example_diag4 requires q >= 1");
  }
  for (double w : {a, b, c, d}) {
    if (w < -1e-12) {
      throw std::invalid_argument("weights must be nonnegative");
    }
  }
  if (std::abs(a + b + c + d - 1.0) > 1e-12) {
    throw std::invalid_argument("weights must sum to 1");
  }
  double lhs = std::pow(a + b, q) + std::pow(c + d, q) + std::pow(a + c, q) +
               std::pow(b + d, q);
  double rhs = 1.0 + std::pow(a, q) + std::pow(b, q) + std::pow(c, q) +
               std::pow(d, q);
  return {lhs, rhs};
}

TripartiteState example_diag4_state(double a, double b, double c, double d) {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  m(3, 3) = d;
  return TripartiteState({2, 1, 2}, DensityMatrix(std::move(m)));
}

DeficitReport make_deficit_report(const TripartiteState& t, double q) {
  DeficitReport r;
  r.q = q;
  r.s123 = tsallis_entropy(t.state(), q);
  r.s12 = tsallis_entropy(t.reduced_12(), q);
  r.s23 = tsallis_entropy(t.reduced_23(), q);
  r.s2 = tsallis_entropy(t.reduced_2(), q);
  r.deficit = r.s12 + r.s23 - r.s123 - r.s2;
  r.violation = r.deficit < kViolationThreshold;

  std::optional<TripartiteState> reg;
  const TripartiteState* base = &t;
  if (!t.state().strictly_positive()) {
    reg.emplace(regularize(t));
    base = &*reg;
    r.regularization_epsilon = kRegularizationEpsilon;
  }
  Thm1Forms t1 = thm1_forms(*base, q);
  r.thm1_lhs = t1.lhs;
  r.thm1_rhs = t1.rhs;
  if (q <= kOperatorConvexQMax) {
    Thm2Check t2 = thm2_check(*base, q);
    r.thm2_lhs = t2.lhs;
    r.thm2_rhs = t2.rhs;
  } else {
    r.thm2_lhs = kNan;
    r.thm2_rhs = kNan;
  }

  Thm3Conditions t3 = thm3_conditions(t);
  r.thm3_commutes = t3.commutes;
  r.thm3_dominance = t3.dominance;

  if (q > 1.0) {
    ViolationBound b = violation_upper_bound(t, q);
    r.bound_min_expr = b.min_expr;
    r.bound_dim = b.dim_bound;
    r.bound_dim_alt = b.dim_bound_alt;
  } else {
    r.bound_min_expr = kNan;
    r.bound_dim = kNan;
    r.bound_dim_alt = kNan;
  }
  return r;
}

}  // namespace qtsallis
