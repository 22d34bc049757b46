#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qtsallis {

/// Width of the q ~ 1 window in which the deformed logarithm switches to
/// the natural logarithm. Inside the window (x^(q-1)-1)/(q-1) and ln x
/// agree to ~1e-8 relative, so the switch is seamless.
inline constexpr double kQOneWindow = 1e-8;

/// Upper end of the operator-convexity window of -ln_q. Inequalities that
/// rest on operator convexity (monotonicity, generalized SSA) require
/// 0 < q <= 2.
inline constexpr double kOperatorConvexQMax = 2.0;

/// Deformed (q-)logarithm: (x^(q-1)-1)/(q-1) for q != 1, ln x at q = 1.
///
/// Domain: x > 0 for q <= 1; x >= 0 for q > 1, where ln_q(0) = -1/(q-1).
/// Throws std::domain_error outside the domain, std::invalid_argument for
/// q <= 0.
double ln_q(double x, double q);

/// Ln_q(x) = -x * ln_q(x), extended by continuity with Ln_q(0) = 0.
/// The Tsallis entropy of a spectrum is the sum of Ln_q over it.
double Ln_q(double x, double q);

/// Both sides of ln_q(x) - ln_q(y) = -ln_q(y/x) * x^(q-1), for x, y > 0.
std::pair<double, double> identity_comp1(double x, double y, double q);

/// Both sides of
/// ln_q(x) - ln_q(y) = -ln_q(y/x) - (q-1) * ln_q(y/x) * ln_q(x).
std::pair<double, double> identity_comp2(double x, double y, double q);

/// x^q * ln_q(1/x); equals Ln_q(x) for all x > 0.
double x_pow_q_lnq_inverse(double x, double q);

/// Scalar function applied to spectra: one of ln_q, -ln_q, Ln_q, or a
/// real power. The q parameter must be positive; the power kind carries
/// its exponent and ignores q.
class QScalarFunction {
 public:
  enum class Kind { LnQ, NegLnQ, BigLnQ, Power };

  static QScalarFunction ln_q(double q) { return {Kind::LnQ, q, 0.0}; }
  static QScalarFunction neg_ln_q(double q) { return {Kind::NegLnQ, q, 0.0}; }
  static QScalarFunction big_ln_q(double q) { return {Kind::BigLnQ, q, 0.0}; }
  static QScalarFunction power(double exponent) {
    return {Kind::Power, 1.0, exponent};
  }

  Kind kind() const { return kind_; }
  double q() const { return q_; }
  double exponent() const { return exponent_; }

  /// True when the function is defined at x (x is an eigenvalue or an
  /// eigenvalue ratio, already clamped to [0, inf)).
  bool defined_at(double x) const;

  /// Evaluates at x >= 0. Throws std::domain_error when undefined.
  double operator()(double x) const;

  /// Short name for error messages, e.g. "-ln_q(q=1.5)".
  std::string name() const;

 private:
  QScalarFunction(Kind kind, double q, double exponent);

  Kind kind_;
  double q_;
  double exponent_;
};

}  // namespace qtsallis
