#include "qtsallis/linalg.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qtsallis {

double frobenius_norm(const ComplexMatrix& m) { return m.norm(); }

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) {
    return false;
  }
  return (m - m.adjoint()).norm() <= tol * std::max(1.0, m.norm());
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  return Eigen::kroneckerProduct(a, b);
}

ComplexMatrix partial_trace(const ComplexMatrix& m,
                            const std::vector<Eigen::Index>& dims,
                            const std::vector<int>& keep) {
  const int n_factors = static_cast<int>(dims.size());
  Eigen::Index total = 1;
  for (Eigen::Index d : dims) {
    if (d < 1) {
      throw std::invalid_argument("factor dimensions must be >= 1");
    }
    total *= d;
  }
  if (m.rows() != total || m.cols() != total) {
    throw std::invalid_argument("matrix dimension " + std::to_string(m.rows()) +
                                " does not match factor product " +
                                std::to_string(total));
  }
  if (keep.empty() || static_cast<int>(keep.size()) >= n_factors) {
    throw std::invalid_argument(
        "keep must be a nonempty proper subset of the factors");
  }
  for (size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= n_factors ||
        (i > 0 && keep[i] <= keep[i - 1])) {
      throw std::invalid_argument("keep indices must be strictly increasing "
                                  "and in range");
    }
  }

  std::vector<int> traced;
  for (int f = 0; f < n_factors; ++f) {
    if (std::find(keep.begin(), keep.end(), f) == keep.end()) {
      traced.push_back(f);
    }
  }

  // Row-major strides of each factor within a composite index.
  std::vector<Eigen::Index> stride(n_factors, 1);
  for (int f = n_factors - 2; f >= 0; --f) {
    stride[f] = stride[f + 1] * dims[f + 1];
  }

  Eigen::Index kept_dim = 1;
  for (int f : keep) {
    kept_dim *= dims[f];
  }
  Eigen::Index traced_dim = total / kept_dim;

  // Composite index of the full space from a kept-part index and a
  // traced-part index.
  auto compose = [&](Eigen::Index kept_idx, Eigen::Index traced_idx) {
    Eigen::Index full = 0;
    for (int i = static_cast<int>(keep.size()) - 1; i >= 0; --i) {
      int f = keep[i];
      full += (kept_idx % dims[f]) * stride[f];
      kept_idx /= dims[f];
    }
    for (int i = static_cast<int>(traced.size()) - 1; i >= 0; --i) {
      int f = traced[i];
      full += (traced_idx % dims[f]) * stride[f];
      traced_idx /= dims[f];
    }
    return full;
  };

  ComplexMatrix out = ComplexMatrix::Zero(kept_dim, kept_dim);
  for (Eigen::Index r = 0; r < kept_dim; ++r) {
    for (Eigen::Index c = 0; c < kept_dim; ++c) {
      std::complex<double> sum = 0.0;
      for (Eigen::Index t = 0; t < traced_dim; ++t) {
        sum += m(compose(r, t), compose(c, t));
      }
      out(r, c) = sum;
    }
  }
  return out;
}

SpectralDecomposition hermitian_eig(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("hermitian_eig requires a square matrix");
  }
  if (!is_hermitian(m)) {
    throw std::invalid_argument("hermitian_eig requires a Hermitian matrix");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed to converge");
  }

  const Eigen::Index n = m.rows();
  SpectralDecomposition sd;
  sd.eigenvalues.resize(n);
  sd.eigenvectors.resize(n, n);
  // Eigen returns ascending order; store descending.
  for (Eigen::Index j = 0; j < n; ++j) {
    sd.eigenvalues[j] = solver.eigenvalues()[n - 1 - j];
    sd.eigenvectors.col(j) = solver.eigenvectors().col(n - 1 - j);
  }
  // Phase-fix each column: first component of nonnegligible magnitude is
  // made real positive.
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      std::complex<double> v = sd.eigenvectors(i, j);
      if (std::abs(v) > 1e-12) {
        sd.eigenvectors.col(j) *= std::conj(v) / std::abs(v);
        break;
      }
    }
  }
  return sd;
}

RealVector clamp_spectrum(const RealVector& eigenvalues) {
  RealVector out = eigenvalues;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (out[i] < kEigClampNeg) {
      throw std::invalid_argument(
          "matrix is not positive semidefinite: eigenvalue " +
          std::to_string(out[i]));
    }
    if (out[i] <= kEigClampPos) {
      out[i] = 0.0;
    }
  }
  return out;
}

ComplexMatrix spectral_apply(const QScalarFunction& f, const ComplexMatrix& m) {
  SpectralDecomposition sd = hermitian_eig(m);
  RealVector lam = clamp_spectrum(sd.eigenvalues);
  RealVector mapped(lam.size());
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (!f.defined_at(lam[i])) {
      throw std::domain_error(f.name() + " undefined at eigenvalue " +
                              std::to_string(lam[i]) + " (index " +
                              std::to_string(i) + ")");
    }
    mapped[i] = f(lam[i]);
  }
  return sd.eigenvectors * mapped.asDiagonal() * sd.eigenvectors.adjoint();
}

double trace_pairing(const QScalarFunction& f, const QScalarFunction& g,
                     const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    throw std::invalid_argument("trace_pairing requires equal dimensions");
  }
  SpectralDecomposition rd = hermitian_eig(rho);
  SpectralDecomposition sd = hermitian_eig(sigma);
  RealVector lam = clamp_spectrum(rd.eigenvalues);
  RealVector mu = clamp_spectrum(sd.eigenvalues);

  RealVector flam(lam.size()), gmu(mu.size());
  for (Eigen::Index j = 0; j < lam.size(); ++j) {
    if (!f.defined_at(lam[j])) {
      throw std::domain_error(f.name() + " undefined at eigenvalue " +
                              std::to_string(lam[j]));
    }
    flam[j] = f(lam[j]);
  }
  for (Eigen::Index k = 0; k < mu.size(); ++k) {
    if (!g.defined_at(mu[k])) {
      throw std::domain_error(g.name() + " undefined at eigenvalue " +
                              std::to_string(mu[k]));
    }
    gmu[k] = g(mu[k]);
  }

  // |<phi_j|psi_k>|^2 for all pairs at once.
  ComplexMatrix overlap = rd.eigenvectors.adjoint() * sd.eigenvectors;
  double total = 0.0;
  for (Eigen::Index j = 0; j < lam.size(); ++j) {
    for (Eigen::Index k = 0; k < mu.size(); ++k) {
      total += flam[j] * gmu[k] * std::norm(overlap(j, k));
    }
  }
  return total;
}

double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw std::invalid_argument("commutator_norm requires equal square dims");
  }
  return (a * b - b * a).norm();
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1) {
    throw std::invalid_argument("density matrix must be square");
  }
  if (!is_hermitian(m_)) {
    throw std::invalid_argument("density matrix must be Hermitian");
  }
  double tr = m_.trace().real();
  if (std::abs(tr - 1.0) > kStateTol) {
    throw std::invalid_argument("density matrix must have unit trace, got " +
                                std::to_string(tr));
  }
  // The eigendecomposition doubles as the positivity check:
  // clamp_spectrum rejects anything below -1e-10 and zeroes roundoff
  // negatives, so the cached spectrum is exactly PSD.
  SpectralDecomposition sd = hermitian_eig(m_);
  sd.eigenvalues = clamp_spectrum(sd.eigenvalues);
  eig_ = std::make_shared<const SpectralDecomposition>(std::move(sd));
}

const SpectralDecomposition& DensityMatrix::decomposition() const {
  return *eig_;
}

const RealVector& DensityMatrix::spectrum() const {
  return decomposition().eigenvalues;
}

double DensityMatrix::min_eigenvalue() const {
  const RealVector& s = spectrum();
  return s[s.size() - 1];
}

bool DensityMatrix::strictly_positive(double floor) const {
  return min_eigenvalue() > floor;
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) /
                       static_cast<double>(dim));
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  double n2 = psi.squaredNorm();
  if (n2 <= 0.0) {
    throw std::invalid_argument("pure state vector must be nonzero");
  }
  return DensityMatrix(psi * psi.adjoint() / n2);
}

BipartiteState::BipartiteState(Eigen::Index d1, Eigen::Index d2,
                               DensityMatrix state)
    : d1_(d1), d2_(d2), state_(std::move(state)) {
  if (d1_ * d2_ != state_.dim()) {
    throw std::invalid_argument("bipartite dims do not match state dimension");
  }
}

DensityMatrix BipartiteState::reduced_1() const {
  return DensityMatrix(partial_trace(state_.matrix(), {d1_, d2_}, {0}));
}

DensityMatrix BipartiteState::reduced_2() const {
  return DensityMatrix(partial_trace(state_.matrix(), {d1_, d2_}, {1}));
}

TripartiteState::TripartiteState(Dims3 dims, DensityMatrix state)
    : dims_(dims), state_(std::move(state)) {
  if (dims_.total() != state_.dim()) {
    throw std::invalid_argument(
        "tripartite dims do not match state dimension");
  }
}

DensityMatrix TripartiteState::reduced(const std::vector<int>& keep) const {
  return DensityMatrix(partial_trace(state_.matrix(),
                                     {dims_.d1, dims_.d2, dims_.d3}, keep));
}

}  // namespace qtsallis
