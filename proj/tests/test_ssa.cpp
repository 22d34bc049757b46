// The SSA suite: deficit, the theorem checks, the violation bounds, the
// classical case, and the named example generators.

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "qtsallis/entropy.hpp"
#include "qtsallis/linalg.hpp"
#include "qtsallis/quasi_entropy.hpp"
#include "qtsallis/sampler.hpp"
#include "qtsallis/ssa.hpp"

using namespace qtsallis;
using Catch::Matchers::WithinAbs;

namespace {

/// Closed forms printed for the counterexample state:
/// S_q(rho123) + S_q(rho2) and S_q(rho12) + S_q(rho23).
double proposition_lhs(double q) {
  return (2.0 - 4.0 * std::pow(0.5, q)) / (q - 1.0);
}
double proposition_rhs(double q) {
  return (1.0 - 4.0 * std::pow(0.25, q)) / (q - 1.0);
}

TripartiteState random_tripartite(Rng& rng) {
  return TripartiteState(Dims3{2, 2, 2}, random_density(8, rng));
}

}  // namespace

TEST_CASE("ssa_deficit on the counterexample state") {
  TripartiteState t = example_proposition();
  SECTION("closed forms across a q grid") {
    for (double q : {1.25, 1.5, 2.0, 2.5, 3.0}) {
      double s123 = tsallis_entropy(t.state(), q);
      double s2 = tsallis_entropy(t.reduced_2(), q);
      double s12 = tsallis_entropy(t.reduced_12(), q);
      double s23 = tsallis_entropy(t.reduced_23(), q);
      REQUIRE_THAT(s123 + s2, WithinAbs(proposition_lhs(q), 1e-12));
      REQUIRE_THAT(s12 + s23, WithinAbs(proposition_rhs(q), 1e-12));
      REQUIRE_THAT(ssa_deficit(t, q),
                   WithinAbs(proposition_rhs(q) - proposition_lhs(q),
                             1e-12));
    }
  }
  SECTION("the q = 2 violation") {
    REQUIRE_THAT(ssa_deficit(t, 2.0), WithinAbs(-0.25, 1e-12));
  }
  SECTION("SSA still holds at q = 1") {
    REQUIRE(ssa_deficit(t, 1.0) >= -1e-10);
  }
}

TEST_CASE("ssa_deficit is nonnegative at q = 1 on random states") {
  Rng rng(61);
  for (int i = 0; i < 100; ++i) {
    REQUIRE(ssa_deficit(random_tripartite(rng), 1.0) >= -1e-9);
  }
}

TEST_CASE("regularize") {
  TripartiteState t = example_proposition();
  REQUIRE_FALSE(t.state().strictly_positive());
  TripartiteState r = regularize(t);
  REQUIRE(r.state().strictly_positive());
  REQUIRE((r.dims() == t.dims()));
  REQUIRE_THAT(r.state().matrix().trace().real(), WithinAbs(1.0, 1e-14));
  ComplexMatrix expected =
      (1.0 - kRegularizationEpsilon) * t.state().matrix() +
      kRegularizationEpsilon * ComplexMatrix::Identity(8, 8) / 8.0;
  REQUIRE(frobenius_norm(r.state().matrix() - expected) <= 1e-15);
}

TEST_CASE("thm1_forms") {
  Rng rng(62);
  SECTION("entropy-difference identities and verdict equivalence") {
    for (int i = 0; i < 80; ++i) {
      TripartiteState t = random_tripartite(rng);
      for (double q : {0.5, 1.0, 1.5, 2.0}) {
        Thm1Forms forms = thm1_forms(t, q);
        double s123 = tsallis_entropy(t.state(), q);
        double s12 = tsallis_entropy(t.reduced_12(), q);
        double s23 = tsallis_entropy(t.reduced_23(), q);
        double s2 = tsallis_entropy(t.reduced_2(), q);
        REQUIRE_THAT(forms.lhs, WithinAbs(s12 - s123, 1e-10));
        REQUIRE_THAT(forms.rhs, WithinAbs(s2 - s23, 1e-10));
        // The comparison of the two quasi-entropies and the deficit sign
        // are the same statement.
        double deficit = ssa_deficit(t, q);
        REQUIRE((forms.lhs - forms.rhs >= 0) == (deficit >= 0));
      }
    }
  }
  SECTION("maximally mixed closed form") {
    TripartiteState t(Dims3{2, 2, 2}, DensityMatrix::maximally_mixed(8));
    for (double q : {0.5, 1.5, 2.0}) {
      Thm1Forms forms = thm1_forms(t, q);
      REQUIRE_THAT(forms.lhs,
                   WithinAbs(-ln_q(0.25, q) + ln_q(0.125, q), 1e-10));
      REQUIRE_THAT(forms.rhs,
                   WithinAbs(-ln_q(0.5, q) + ln_q(0.25, q), 1e-10));
    }
  }
  SECTION("singular states are rejected") {
    REQUIRE_THROWS_AS(thm1_forms(example_proposition(), 2.0),
                      std::invalid_argument);
  }
}

TEST_CASE("thm2_check") {
  Rng rng(63);
  SECTION("rhs vanishes identically at q = 1") {
    for (int i = 0; i < 20; ++i) {
      Thm2Check c = thm2_check(random_tripartite(rng), 1.0);
      REQUIRE(c.rhs == 0.0);
      REQUIRE(c.lhs >= -1e-9);
    }
  }
  SECTION("generalized SSA holds on the operator-convexity window") {
    for (int i = 0; i < 40; ++i) {
      TripartiteState t = random_tripartite(rng);
      for (double q = 0.25; q <= 2.0; q += 0.25) {
        Thm2Check c = thm2_check(t, q);
        REQUIRE(c.lhs >= c.rhs - 1e-9);
        REQUIRE_THAT(c.lhs, WithinAbs(ssa_deficit(t, q), 1e-12));
      }
    }
  }
  SECTION("regularized counterexample keeps the inequality") {
    TripartiteState reg = regularize(example_proposition());
    Thm2Check c = thm2_check(reg, 2.0);
    REQUIRE_THAT(c.lhs, WithinAbs(-0.25, 1e-4));
    REQUIRE(c.rhs <= c.lhs);
  }
  SECTION("q outside (0, 2] is rejected") {
    TripartiteState t = random_tripartite(rng);
    REQUIRE_THROWS_AS(thm2_check(t, 2.5), std::invalid_argument);
    REQUIRE_THROWS_AS(thm2_check(t, 0.0), std::invalid_argument);
  }
}

TEST_CASE("thm3_conditions") {
  Rng rng(64);
  SECTION("classical diagonal states satisfy the hypothesis set") {
    for (int i = 0; i < 30; ++i) {
      ProbabilityTensor p = random_probability_tensor(Dims3{2, 2, 2}, rng);
      Thm3Conditions c = thm3_conditions(p.diagonal_embedding());
      REQUIRE(c.commutes);
      REQUIRE(c.overlap_dominance);
      REQUIRE(c.operator_dominance);
      REQUIRE(c.satisfied);
      REQUIRE(c.grid_min_deficit >= -1e-9);
    }
  }
  SECTION("rotated-Bell family satisfies the hypothesis set") {
    for (double theta : {0.0, 0.3, 0.7, 1.2}) {
      TripartiteState t = example_bell_family(
          0.5, 0.6, theta, DensityMatrix::maximally_mixed(2));
      Thm3Conditions c = thm3_conditions(t);
      REQUIRE(c.commutes);
      REQUIRE(c.dominance);
      REQUIRE(c.satisfied);
    }
  }
  SECTION("the counterexample fails the hypothesis set") {
    // rho23 = I/4 makes the commutation trivial and the printed overlap
    // test vacuous; the operator dominance rho123 <= I1 (x) rho23 is
    // what fails (and must fail -- the state violates SSA).
    Thm3Conditions c = thm3_conditions(example_proposition());
    REQUIRE(c.commutes);
    REQUIRE(c.overlap_dominance);
    REQUIRE_FALSE(c.operator_dominance);
    REQUIRE(c.dominance_min_eig < -0.2);
    REQUIRE_FALSE(c.satisfied);
    REQUIRE(std::isnan(c.grid_min_deficit));
  }
  SECTION("generic random states fail the commutation test") {
    Thm3Conditions c = thm3_conditions(random_tripartite(rng));
    REQUIRE_FALSE(c.commutes);
    REQUIRE(c.commutator > 1e-6);
  }
}

TEST_CASE("violation_upper_bound") {
  Rng rng(65);
  SECTION("the counterexample bound chain at q = 2") {
    TripartiteState t = example_proposition();
    ViolationBound b = violation_upper_bound(t, 2.0);
    double deficit = ssa_deficit(t, 2.0);
    REQUIRE_THAT(b.min_expr, WithinAbs(0.25, 1e-12));
    REQUIRE_THAT(b.dim_bound, WithinAbs(1.0, 1e-12));
    REQUIRE(-deficit <= b.min_expr + 1e-10);
    REQUIRE(b.min_expr <= b.dim_bound + 1e-10);
  }
  SECTION("chain of bounds on random states") {
    for (int i = 0; i < 100; ++i) {
      TripartiteState t = random_tripartite(rng);
      for (double q : {1.5, 2.0, 3.0}) {
        ViolationBound b = violation_upper_bound(t, q);
        REQUIRE(-ssa_deficit(t, q) <= b.min_expr + 1e-10);
        REQUIRE(b.min_expr <= b.dim_bound + 1e-10);
      }
    }
  }
  SECTION("product states evaluate the min expression directly") {
    DensityMatrix r1 = random_density(2, rng);
    DensityMatrix r2 = random_density(2, rng);
    DensityMatrix r3 = random_density(2, rng);
    TripartiteState t(
        Dims3{2, 2, 2},
        DensityMatrix(kron(kron(r1.matrix(), r2.matrix()), r3.matrix())));
    double q = 2.0;
    // On a product state both subadditivity gaps collapse via the
    // pseudo-additivity identity.
    double gap12 = (q - 1.0) * tsallis_entropy(r1, q) *
                   tsallis_entropy(r2, q);
    double gap23 = (q - 1.0) * tsallis_entropy(r2, q) *
                   tsallis_entropy(r3, q);
    ViolationBound b = violation_upper_bound(t, q);
    REQUIRE_THAT(b.min_expr, WithinAbs(std::min(gap12, gap23), 1e-10));
  }
  SECTION("asymmetric dims separate the two dimension bounds") {
    // dims (3, 2, 4): min(d1, d3) = 3 but min(d1, d2) = 2.
    Rng rng2(66);
    TripartiteState t(Dims3{3, 2, 4}, random_density(24, rng2));
    ViolationBound b = violation_upper_bound(t, 2.0);
    REQUIRE_THAT(b.dim_bound,
                 WithinAbs(-ln_q(0.5, 2.0) - ln_q(1.0 / 3.0, 2.0),
                           1e-12));
    REQUIRE_THAT(b.dim_bound_alt,
                 WithinAbs(-ln_q(0.5, 2.0) - ln_q(0.5, 2.0), 1e-12));
    REQUIRE(-ssa_deficit(t, 2.0) <= b.min_expr + 1e-10);
  }
  SECTION("q <= 1 is rejected") {
    REQUIRE_THROWS_AS(violation_upper_bound(example_proposition(), 1.0),
                      std::invalid_argument);
  }
}

TEST_CASE("classical_ssa_check") {
  Rng rng(67);
  SECTION("product tensors have zero deficit at q = 1") {
    // p_{jkl} = a_j b_k c_l: conditional mutual information vanishes.
    std::vector<double> a = {0.3, 0.7}, b = {0.2, 0.8}, c = {0.6, 0.4};
    std::vector<double> w;
    for (double x : a)
      for (double y : b)
        for (double z : c) w.push_back(x * y * z);
    ProbabilityTensor p(Dims3{2, 2, 2}, w);
    REQUIRE_THAT(classical_ssa_check(p, 1.0), WithinAbs(0.0, 1e-12));
  }
  SECTION("uniform tensor closed form") {
    std::vector<double> w(8, 0.125);
    ProbabilityTensor p(Dims3{2, 2, 2}, w);
    // 0.75 + 0.75 - 0.875 - 0.5 = 0.125 at q = 2.
    REQUIRE_THAT(classical_ssa_check(p, 2.0), WithinAbs(0.125, 1e-12));
  }
  SECTION("random tensors satisfy classical SSA for q >= 1") {
    for (int i = 0; i < 100; ++i) {
      ProbabilityTensor p = random_probability_tensor(Dims3{3, 3, 3}, rng);
      for (double q : {1.0, 1.5, 2.0, 5.0}) {
        REQUIRE(classical_ssa_check(p, q) >= -1e-10);
      }
    }
  }
  SECTION("agrees with the diagonal embedding's quantum deficit") {
    for (int i = 0; i < 20; ++i) {
      ProbabilityTensor p = random_probability_tensor(Dims3{2, 2, 2}, rng);
      for (double q : {1.0, 2.0}) {
        REQUIRE_THAT(classical_ssa_check(p, q),
                     WithinAbs(ssa_deficit(p.diagonal_embedding(), q),
                               1e-10));
      }
    }
  }
  SECTION("q < 1 carries no guarantee and is rejected") {
    std::vector<double> w(8, 0.125);
    ProbabilityTensor p(Dims3{2, 2, 2}, w);
    REQUIRE_THROWS_AS(classical_ssa_check(p, 0.5), std::invalid_argument);
  }
}

TEST_CASE("example_proposition matrix is pinned entrywise") {
  ComplexMatrix m = example_proposition().state().matrix();
  REQUIRE(m.rows() == 8);
  for (Eigen::Index r = 0; r < 8; ++r) {
    for (Eigen::Index c = 0; c < 8; ++c) {
      bool block_a = (r == 2 || r == 4) && (c == 2 || c == 4);
      bool block_b = (r == 3 || r == 5) && (c == 3 || c == 5);
      double expected = (block_a || block_b) ? 0.25 : 0.0;
      REQUIRE_THAT(m(r, c).real(), WithinAbs(expected, 1e-15));
      REQUIRE_THAT(m(r, c).imag(), WithinAbs(0.0, 1e-15));
    }
  }
}

TEST_CASE("example_entangled_product") {
  SECTION("Bell (x) I/2 deficits") {
    TripartiteState t = example_entangled_product(
        bell_pair(), DensityMatrix::maximally_mixed(2));
    REQUIRE_THAT(ssa_deficit(t, 2.0), WithinAbs(-0.25, 1e-12));
    REQUIRE_THAT(ssa_deficit(t, 1.0), WithinAbs(0.0, 1e-10));
    // delta_q = (1-q) S_q(rho2) S_q(rho3) on the whole grid, negative
    // for q > 1.
    for (double q = 1.25; q <= 3.0 + 1e-12; q += 0.25) {
      double s2 = tsallis_entropy(t.reduced_2(), q);
      double s3 = tsallis_entropy(t.reduced_3(), q);
      double deficit = ssa_deficit(t, q);
      REQUIRE_THAT(deficit, WithinAbs((1.0 - q) * s2 * s3, 1e-12));
      REQUIRE(deficit <= -1e-6);
    }
  }
  SECTION("input validation") {
    Rng rng(68);
    // Mixed rho12 is not a pure entangled state.
    REQUIRE_THROWS_AS(
        example_entangled_product(
            BipartiteState(2, 2, DensityMatrix::maximally_mixed(4)),
            DensityMatrix::maximally_mixed(2)),
        std::invalid_argument);
    // Product pure state carries no entanglement (S_q(rho2) = 0).
    ComplexVector sep(4);
    sep << 1.0, 0.0, 0.0, 0.0;
    REQUIRE_THROWS_AS(
        example_entangled_product(
            BipartiteState(2, 2, DensityMatrix::pure(sep)),
            DensityMatrix::maximally_mixed(2)),
        std::invalid_argument);
    // rho3 must have rank > 1.
    ComplexVector one(2);
    one << 1.0, 0.0;
    REQUIRE_THROWS_AS(
        example_entangled_product(bell_pair(), DensityMatrix::pure(one)),
        std::invalid_argument);
  }
}

TEST_CASE("example_bell_family") {
  SECTION("theta = 0 gives the diagonal Lambda") {
    TripartiteState t = example_bell_family(
        0.6, 0.55, 0.0, DensityMatrix::maximally_mixed(2));
    ComplexMatrix rho23 = t.reduced_23().matrix();
    ComplexMatrix lambda = ComplexMatrix::Zero(4, 4);
    lambda(0, 0) = 0.6 * 0.55;
    lambda(1, 1) = 0.4 * 0.55;
    lambda(2, 2) = 0.6 * 0.45;
    lambda(3, 3) = 0.4 * 0.45;
    REQUIRE(frobenius_norm(rho23 - lambda) <= 1e-12);
  }
  SECTION("rho2 closed form") {
    for (double theta : {0.3, 0.7, 1.2}) {
      double p = 0.5, r = 0.6;
      TripartiteState t = example_bell_family(
          p, r, theta, DensityMatrix::maximally_mixed(2));
      double c2 = std::cos(theta) * std::cos(theta);
      double s2 = std::sin(theta) * std::sin(theta);
      ComplexMatrix rho2 = t.reduced_2().matrix();
      REQUIRE_THAT(rho2(0, 0).real(),
                   WithinAbs(r * c2 + (1.0 - r) * s2, 1e-12));
      REQUIRE_THAT(rho2(1, 1).real(),
                   WithinAbs(r * s2 + (1.0 - r) * c2, 1e-12));
      REQUIRE(std::abs(rho2(0, 1)) <= 1e-12);
    }
  }
  SECTION("spectrum is the product of factor spectra") {
    Rng rng(69);
    DensityMatrix rho1 = random_density(2, rng);
    double p = 0.5, r = 0.55;
    TripartiteState t = example_bell_family(p, r, 0.7, rho1);
    std::vector<double> expected;
    for (double nu : rho1.spectrum()) {
      for (double lam : {p * r, (1.0 - p) * r, p * (1.0 - r),
                         (1.0 - p) * (1.0 - r)}) {
        expected.push_back(nu * lam);
      }
    }
    std::sort(expected.begin(), expected.end(), std::greater<>());
    const RealVector& got = t.state().spectrum();
    for (Eigen::Index j = 0; j < got.size(); ++j) {
      REQUIRE_THAT(got[j], WithinAbs(expected[j], 1e-12));
    }
  }
  SECTION("parameter constraints") {
    DensityMatrix i2 = DensityMatrix::maximally_mixed(2);
    REQUIRE_THROWS_AS(example_bell_family(0.4, 0.6, 0.0, i2),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(example_bell_family(0.6, 1.1, 0.0, i2),
                      std::invalid_argument);
    // p r <= 1 - r fails for p = 1, r = 0.9.
    REQUIRE_THROWS_AS(example_bell_family(1.0, 0.9, 0.0, i2),
                      std::invalid_argument);
  }
}

TEST_CASE("example_diag4") {
  SECTION("pinned points") {
    auto [lhs1, rhs1] = example_diag4(1.0, 0.0, 0.0, 0.0, 2.0);
    REQUIRE_THAT(lhs1, WithinAbs(2.0, 1e-15));
    REQUIRE_THAT(rhs1, WithinAbs(2.0, 1e-15));
    auto [lhs2, rhs2] = example_diag4(0.25, 0.25, 0.25, 0.25, 2.0);
    REQUIRE_THAT(lhs2, WithinAbs(1.0, 1e-15));
    REQUIRE_THAT(rhs2, WithinAbs(1.25, 1e-15));
  }
  SECTION("inequality across random simplex points") {
    Rng rng(70);
    for (int i = 0; i < 200; ++i) {
      double raw[4];
      double sum = 0.0;
      for (double& x : raw) {
        x = -std::log(1.0 - rng.uniform());
        sum += x;
      }
      for (double& x : raw) x /= sum;
      for (double q : {1.0, 1.5, 2.0, 3.0, 4.0}) {
        auto [lhs, rhs] = example_diag4(raw[0], raw[1], raw[2], raw[3], q);
        REQUIRE(lhs <= rhs + 1e-12);
      }
    }
  }
  SECTION("embedded state realizes the gap as an SSA deficit") {
    TripartiteState t = example_diag4_state(0.4, 0.3, 0.2, 0.1);
    REQUIRE((t.dims() == Dims3{2, 1, 2}));
    for (double q : {1.5, 2.0}) {
      auto [lhs, rhs] = example_diag4(0.4, 0.3, 0.2, 0.1, q);
      // rhs - lhs = (q-1) * gap = (q-1) * deficit of the embedding.
      REQUIRE_THAT(ssa_deficit(t, q),
                   WithinAbs((rhs - lhs) / (q - 1.0), 1e-12));
    }
  }
}

TEST_CASE("monotonicity instances behind the theorems") {
  Rng rng(71);
  SECTION("lifted-weight inequality from tracing factor 1") {
    // S_f^{I1 (x) V}(rho123 || rho12 (x) I3) >= S_f^V(rho23 || rho2 (x) I3)
    // for operator-convex f: the monotonicity lemma applied to tr_1.
    for (int i = 0; i < 30; ++i) {
      TripartiteState t = random_tripartite(rng);
      for (double q : {0.5, 1.0, 1.5, 2.0}) {
        auto f = QScalarFunction::neg_ln_q(q);
        ComplexMatrix v = spectral_apply(
            QScalarFunction::power((q - 1.0) / 2.0),
            t.reduced_23().matrix());
        ComplexMatrix sigma_whole =
            kron(t.reduced_12().matrix(), ComplexMatrix::Identity(2, 2));
        ComplexMatrix sigma_part =
            kron(t.reduced_2().matrix(), ComplexMatrix::Identity(2, 2));
        double whole = quasi_entropy_spectral(QuasiEntropyInput(
            t.state(), sigma_whole,
            kron(ComplexMatrix::Identity(2, 2), v), f));
        double part = quasi_entropy_spectral(
            QuasiEntropyInput(t.reduced_23(), sigma_part, v, f));
        REQUIRE(whole >= part - 1e-10);
      }
    }
  }
  SECTION("weight-comparison implication closes the SSA argument") {
    // Whenever S^U >= S^{I1 (x) V} holds numerically, combining it with
    // the lifted-weight inequality forces a nonnegative deficit.
    for (int i = 0; i < 50; ++i) {
      TripartiteState t = random_tripartite(rng);
      for (double q : {1.0, 1.5, 2.0}) {
        auto f = QScalarFunction::neg_ln_q(q);
        ComplexMatrix u = spectral_apply(
            QScalarFunction::power((q - 1.0) / 2.0), t.state().matrix());
        ComplexMatrix v = spectral_apply(
            QScalarFunction::power((q - 1.0) / 2.0),
            t.reduced_23().matrix());
        ComplexMatrix sigma_whole =
            kron(t.reduced_12().matrix(), ComplexMatrix::Identity(2, 2));
        double with_u = quasi_entropy_spectral(
            QuasiEntropyInput(t.state(), sigma_whole, u, f));
        double with_lifted_v = quasi_entropy_spectral(QuasiEntropyInput(
            t.state(), sigma_whole,
            kron(ComplexMatrix::Identity(2, 2), v), f));
        if (with_u >= with_lifted_v - 1e-12) {
          REQUIRE(ssa_deficit(t, q) >= -1e-9);
        }
      }
    }
  }
}

TEST_CASE("make_deficit_report") {
  Rng rng(72);
  SECTION("full-rank state fields are internally consistent") {
    TripartiteState t = random_tripartite(rng);
    DeficitReport r = make_deficit_report(t, 1.5);
    REQUIRE_THAT(r.deficit,
                 WithinAbs(r.s12 + r.s23 - r.s123 - r.s2, 1e-12));
    REQUIRE_THAT(r.deficit, WithinAbs(ssa_deficit(t, 1.5), 1e-15));
    REQUIRE(r.regularization_epsilon == 0.0);
    REQUIRE_THAT(r.thm1_lhs, WithinAbs(r.s12 - r.s123, 1e-10));
    REQUIRE_THAT(r.thm2_lhs, WithinAbs(r.deficit, 1e-12));
    REQUIRE(r.bound_min_expr >= -r.deficit - 1e-10);
    REQUIRE_FALSE(r.violation);
  }
  SECTION("column applicability windows") {
    TripartiteState t = random_tripartite(rng);
    DeficitReport high_q = make_deficit_report(t, 3.0);
    REQUIRE(std::isnan(high_q.thm2_rhs));  // outside (0, 2]
    REQUIRE_FALSE(std::isnan(high_q.bound_dim));
    DeficitReport at_one = make_deficit_report(t, 1.0);
    REQUIRE(std::isnan(at_one.bound_min_expr));  // bounds need q > 1
    REQUIRE(std::isnan(at_one.bound_dim));
    REQUIRE_FALSE(std::isnan(at_one.thm2_rhs));
  }
  SECTION("singular states get regularized quasi-entropy columns") {
    DeficitReport r = make_deficit_report(example_proposition(), 2.0);
    REQUIRE(r.regularization_epsilon == kRegularizationEpsilon);
    // Entropies and the deficit still refer to the state as given.
    REQUIRE_THAT(r.deficit, WithinAbs(-0.25, 1e-12));
    REQUIRE(r.violation);
    // The regularized thm1 columns stay near the exact entropy
    // differences of the singular state.
    REQUIRE_THAT(r.thm1_lhs, WithinAbs(-0.5, 1e-4));
    REQUIRE_THAT(r.thm1_rhs, WithinAbs(-0.25, 1e-4));
  }
}
