#include "qtsallis/entropy.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qtsallis {

ProbabilityTensor::ProbabilityTensor(Dims3 dims, std::vector<double> weights)
    : dims_(dims), p_(std::move(weights)) {
  if (dims_.d1 < 1 || dims_.d2 < 1 || dims_.d3 < 1) {
    throw std::invalid_argument("tensor dimensions must be >= 1");
  }
  if (static_cast<Eigen::Index>(p_.size()) != dims_.total()) {
    throw std::invalid_argument("weight count " + std::to_string(p_.size()) +
                                " does not match dims product " +
                                std::to_string(dims_.total()));
  }
  double sum = 0.0;
  for (double& w : p_) {
    if (w < kEigClampNeg) {
      throw std::invalid_argument("negative probability weight " +
                                  std::to_string(w));
    }
    if (w < 0.0) {
      w = 0.0;
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("weights must sum to 1, got " +
                                std::to_string(sum));
  }
}

double ProbabilityTensor::at(Eigen::Index j, Eigen::Index k,
                             Eigen::Index l) const {
  return p_[static_cast<size_t>((j * dims_.d2 + k) * dims_.d3 + l)];
}

std::vector<double> ProbabilityTensor::marginal_12() const {
  std::vector<double> out(static_cast<size_t>(dims_.d1 * dims_.d2), 0.0);
  for (Eigen::Index j = 0; j < dims_.d1; ++j) {
    for (Eigen::Index k = 0; k < dims_.d2; ++k) {
      for (Eigen::Index l = 0; l < dims_.d3; ++l) {
        out[static_cast<size_t>(j * dims_.d2 + k)] += at(j, k, l);
      }
    }
  }
  return out;
}

std::vector<double> ProbabilityTensor::marginal_23() const {
  std::vector<double> out(static_cast<size_t>(dims_.d2 * dims_.d3), 0.0);
  for (Eigen::Index j = 0; j < dims_.d1; ++j) {
    for (Eigen::Index k = 0; k < dims_.d2; ++k) {
      for (Eigen::Index l = 0; l < dims_.d3; ++l) {
        out[static_cast<size_t>(k * dims_.d3 + l)] += at(j, k, l);
      }
    }
  }
  return out;
}

std::vector<double> ProbabilityTensor::marginal_2() const {
  std::vector<double> out(static_cast<size_t>(dims_.d2), 0.0);
  for (Eigen::Index j = 0; j < dims_.d1; ++j) {
    for (Eigen::Index k = 0; k < dims_.d2; ++k) {
      for (Eigen::Index l = 0; l < dims_.d3; ++l) {
        out[static_cast<size_t>(k)] += at(j, k, l);
      }
    }
  }
  return out;
}

TripartiteState ProbabilityTensor::diagonal_embedding() const {
  const Eigen::Index n = dims_.total();
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = p_[static_cast<size_t>(i)];
  }
  return TripartiteState(dims_, DensityMatrix(std::move(m)));
}

double tsallis_entropy(const RealVector& spectrum, double q) {
  if (!(q > 0.0)) {
    throw std::invalid_argument("tsallis_entropy requires q > 0");
  }
  double s = 0.0;
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
    s += Ln_q(spectrum[i], q);
  }
  return s;
}

double tsallis_entropy(const DensityMatrix& d, double q) {
  return tsallis_entropy(d.spectrum(), q);
}

double trace_power(const DensityMatrix& d, double q) {
  if (!(q > 0.0)) {
    throw std::invalid_argument("trace_power requires q > 0");
  }
  const RealVector& lam = d.spectrum();
  double t = 0.0;
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    t += std::pow(lam[i], q);
  }
  return t;
}

double classical_tsallis_entropy(const std::vector<double>& p, double q) {
  if (!(q > 0.0)) {
    throw std::invalid_argument("classical_tsallis_entropy requires q > 0");
  }
  double s = 0.0;
  for (double w : p) {
    s += Ln_q(w, q);
  }
  return s;
}

std::pair<double, double> product_additivity_check(const DensityMatrix& rho,
                                                   const DensityMatrix& sigma,
                                                   double q) {
  double s_rho = tsallis_entropy(rho, q);
  double s_sigma = tsallis_entropy(sigma, q);
  double direct =
      tsallis_entropy(DensityMatrix(kron(rho.matrix(), sigma.matrix())), q);
  double formula = s_rho + s_sigma + (1.0 - q) * s_rho * s_sigma;
  return {direct, formula};
}

double subadditivity_gap(const BipartiteState& s, double q) {
  double gap = tsallis_entropy(s.reduced_1(), q) +
               tsallis_entropy(s.reduced_2(), q) -
               tsallis_entropy(s.state(), q);
  if (q > 1.0 + kQOneWindow) {
    double gap_qnorm = subadditivity_gap_qnorm(s, q);
    if (std::abs(gap - gap_qnorm) > 1e-10) {
      throw std::logic_error(
          "entropy and q-norm forms of the subadditivity gap disagree: " +
          std::to_string(gap) + " vs " + std::to_string(gap_qnorm));
    }
  }
  return gap;
}

double subadditivity_gap_qnorm(const BipartiteState& s, double q) {
  if (std::abs(q - 1.0) <= kQOneWindow) {
    throw std::invalid_argument("q-norm form is undefined at q = 1");
  }
  return (1.0 + trace_power(s.state(), q) - trace_power(s.reduced_1(), q) -
          trace_power(s.reduced_2(), q)) /
         (q - 1.0);
}

}  // namespace qtsallis
