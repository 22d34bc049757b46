#include "qtsallis/qcalculus.hpp"

#include <cmath>

namespace qtsallis {

namespace {

void check_q(double q) {
  if (!(q > 0.0)) {
    throw std::invalid_argument("q must be positive, got " +
                                std::to_string(q));
  }
}

bool is_q_one(double q) { return std::abs(q - 1.0) <= kQOneWindow; }

}  // namespace

double ln_q(double x, double q) {
  check_q(q);
  if (x < 0.0) {
    throw std::domain_error("ln_q requires x >= 0, got " + std::to_string(x));
  }
  if (is_q_one(q)) {
    if (x == 0.0) {
      throw std::domain_error("ln_q(0) diverges for q <= 1");
    }
    return std::log(x);
  }
  if (x == 0.0) {
    if (q <= 1.0) {
      throw std::domain_error("ln_q(0) diverges for q <= 1");
    }
    return -1.0 / (q - 1.0);
  }
  // (x^(q-1) - 1)/(q - 1) without cancellation near q = 1.
  return std::expm1((q - 1.0) * std::log(x)) / (q - 1.0);
}

double Ln_q(double x, double q) {
  check_q(q);
  if (x < 0.0) {
    throw std::domain_error("Ln_q requires x >= 0, got " + std::to_string(x));
  }
  if (x == 0.0) {
    return 0.0;  // lim_{x->0+} -x ln_q x = 0 for q > 0
  }
  return -x * ln_q(x, q);
}

std::pair<double, double> identity_comp1(double x, double y, double q) {
  double lhs = ln_q(x, q) - ln_q(y, q);
  double rhs = -ln_q(y / x, q) * std::pow(x, q - 1.0);
  return {lhs, rhs};
}

std::pair<double, double> identity_comp2(double x, double y, double q) {
  double lhs = ln_q(x, q) - ln_q(y, q);
  double r = ln_q(y / x, q);
  double rhs = -r - (q - 1.0) * r * ln_q(x, q);
  return {lhs, rhs};
}

double x_pow_q_lnq_inverse(double x, double q) {
  return std::pow(x, q) * ln_q(1.0 / x, q);
}

QScalarFunction::QScalarFunction(Kind kind, double q, double exponent)
    : kind_(kind), q_(q), exponent_(exponent) {
  check_q(q);
}

bool QScalarFunction::defined_at(double x) const {
  if (x < 0.0) {
    return false;
  }
  switch (kind_) {
    case Kind::LnQ:
    case Kind::NegLnQ:
      return x > 0.0 || (!is_q_one(q_) && q_ > 1.0);
    case Kind::BigLnQ:
      return true;
    case Kind::Power:
      return x > 0.0 || exponent_ >= 0.0;
  }
  return false;
}

double QScalarFunction::operator()(double x) const {
  switch (kind_) {
    case Kind::LnQ:
      return qtsallis::ln_q(x, q_);
    case Kind::NegLnQ:
      return -qtsallis::ln_q(x, q_);
    case Kind::BigLnQ:
      return qtsallis::Ln_q(x, q_);
    case Kind::Power:
      if (x == 0.0 && exponent_ < 0.0) {
        throw std::domain_error("x^" + std::to_string(exponent_) +
                                " undefined at x = 0");
      }
      if (x == 0.0 && exponent_ == 0.0) {
        return 1.0;
      }
      return std::pow(x, exponent_);
  }
  throw std::logic_error("unreachable");
}

std::string QScalarFunction::name() const {
  switch (kind_) {
    case Kind::LnQ:
      return "ln_q(q=" + std::to_string(q_) + ")";
    case Kind::NegLnQ:
      return "-ln_q(q=" + std::to_string(q_) + ")";
    case Kind::BigLnQ:
      return "Ln_q(q=" + std::to_string(q_) + ")";
    case Kind::Power:
      return "power(" + std::to_string(exponent_) + ")";
  }
  return "?";
}

}  // namespace qtsallis
