// Python bindings for the qtsallis core: scalar q-calculus, entropies,
// quasi-entropies, the SSA suite, and the sampler/search front end.
//
// Matrices cross the boundary as numpy arrays (complex128); tripartite
// states are passed as (matrix, (d1, d2, d3)) pairs.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <vector>

#include "qtsallis/entropy.hpp"
#include "qtsallis/io.hpp"
#include "qtsallis/linalg.hpp"
#include "qtsallis/qcalculus.hpp"
#include "qtsallis/quasi_entropy.hpp"
#include "qtsallis/sampler.hpp"
#include "qtsallis/ssa.hpp"

namespace py = pybind11;
using namespace qtsallis;

namespace {

TripartiteState make_tripartite(const ComplexMatrix& m,
                                const std::vector<Eigen::Index>& dims) {
  if (dims.size() != 3) {
    throw std::invalid_argument("dims must have exactly three entries");
  }
  return TripartiteState(Dims3{dims[0], dims[1], dims[2]},
                         DensityMatrix(m));
}

QScalarFunction make_function(const std::string& name, double q,
                              double exponent) {
  if (name == "neg-ln-q") return QScalarFunction::neg_ln_q(q);
  if (name == "ln-q") return QScalarFunction::ln_q(q);
  if (name == "big-ln-q") return QScalarFunction::big_ln_q(q);
  if (name == "power") return QScalarFunction::power(exponent);
  throw std::invalid_argument(
      "unknown function name: " + name +
      " (expected neg-ln-q, ln-q, big-ln-q, power)");
}

py::dict report_to_dict(const DeficitReport& r) {
  py::dict d;
  d["q"] = r.q;
  d["S123"] = r.s123;
  d["S12"] = r.s12;
  d["S23"] = r.s23;
  d["S2"] = r.s2;
  d["deficit"] = r.deficit;
  d["thm1_lhs"] = r.thm1_lhs;
  d["thm1_rhs"] = r.thm1_rhs;
  d["thm2_lhs"] = r.thm2_lhs;
  d["thm2_rhs"] = r.thm2_rhs;
  d["thm3_commutes"] = r.thm3_commutes;
  d["thm3_dominance"] = r.thm3_dominance;
  d["bound_min_expr"] = r.bound_min_expr;
  d["bound_dim"] = r.bound_dim;
  d["bound_dim_alt"] = r.bound_dim_alt;
  d["regularization_epsilon"] = r.regularization_epsilon;
  d["violation"] = r.violation;
  return d;
}

}  // namespace

PYBIND11_MODULE(qtsallis, m) {
  m.doc() = "Tsallis entropy and strong-subadditivity toolkit";

  // Scalar q-calculus.
  m.def("ln_q", &ln_q, py::arg("x"), py::arg("q"),
        "Deformed logarithm (x^(q-1) - 1)/(q - 1); natural log at q = 1.");
  m.def("Ln_q", &Ln_q, py::arg("x"), py::arg("q"),
        "The map x -> -x ln_q(x) whose trace gives S_q.");

  // Linear algebra over numpy arrays.
  m.def(
      "kron",
      [](const ComplexMatrix& a, const ComplexMatrix& b) {
        return kron(a, b);
      },
      py::arg("a"), py::arg("b"), "Kronecker product.");
  m.def(
      "partial_trace",
      [](const ComplexMatrix& mat, const std::vector<Eigen::Index>& dims,
         const std::vector<int>& keep) {
        return partial_trace(mat, dims, keep);
      },
      py::arg("matrix"), py::arg("dims"), py::arg("keep"),
      "Trace out the factors not listed in keep (ascending indices).");

  // Entropies.
  m.def(
      "tsallis_entropy",
      [](const ComplexMatrix& mat, double q) {
        return tsallis_entropy(DensityMatrix(mat), q);
      },
      py::arg("rho"), py::arg("q"), "S_q of a density matrix.");
  m.def("classical_tsallis_entropy", &classical_tsallis_entropy,
        py::arg("p"), py::arg("q"), "S_q of a probability vector.");
  m.def(
      "trace_power",
      [](const ComplexMatrix& mat, double q) {
        return trace_power(DensityMatrix(mat), q);
      },
      py::arg("rho"), py::arg("q"), "Tr rho^q over the clamped spectrum.");
  m.def(
      "subadditivity_gap",
      [](const ComplexMatrix& mat, Eigen::Index d1, Eigen::Index d2,
         double q) {
        return subadditivity_gap(BipartiteState(d1, d2, DensityMatrix(mat)),
                                 q);
      },
      py::arg("rho"), py::arg("d1"), py::arg("d2"), py::arg("q"),
      "S_q(rho1) + S_q(rho2) - S_q(rho) for a bipartite state.");

  // Quasi-entropy, both evaluation routes.
  m.def(
      "quasi_entropy",
      [](const ComplexMatrix& rho, const ComplexMatrix& sigma,
         const ComplexMatrix& weight, const std::string& f, double q,
         double exponent, bool oracle) {
        QuasiEntropyInput in(DensityMatrix(rho), sigma, weight,
                             make_function(f, q, exponent));
        return oracle ? quasi_entropy_superop_oracle(in)
                      : quasi_entropy_spectral(in);
      },
      py::arg("rho"), py::arg("sigma"), py::arg("weight"),
      py::arg("f") = "neg-ln-q", py::arg("q") = 2.0,
      py::arg("exponent") = 1.0, py::arg("oracle") = false,
      "S_f^A(rho||sigma), spectral formula or superoperator oracle.");
  m.def(
      "monotonicity_gap",
      [](const ComplexMatrix& a, const ComplexMatrix& b,
         Eigen::Index d1, Eigen::Index d2, const ComplexMatrix& t,
         const std::string& f, double q, double exponent) {
        return monotonicity_gap(BipartiteState(d1, d2, DensityMatrix(a)),
                                BipartiteState(d1, d2, DensityMatrix(b)), t,
                                make_function(f, q, exponent));
      },
      py::arg("a"), py::arg("b"), py::arg("d1"), py::arg("d2"), py::arg("t"),
      py::arg("f") = "neg-ln-q", py::arg("q") = 2.0,
      py::arg("exponent") = 1.0,
      "S_f^{T(x)I}(A||B) - S_f^T(A1||B1); nonnegative for operator-convex "
      "f.");

  // SSA suite.
  m.def(
      "ssa_deficit",
      [](const ComplexMatrix& mat, const std::vector<Eigen::Index>& dims,
         double q) { return ssa_deficit(make_tripartite(mat, dims), q); },
      py::arg("rho"), py::arg("dims"), py::arg("q"),
      "S_q(rho12) + S_q(rho23) - S_q(rho123) - S_q(rho2).");
  m.def(
      "deficit_report",
      [](const ComplexMatrix& mat, const std::vector<Eigen::Index>& dims,
         double q) {
        return report_to_dict(make_deficit_report(make_tripartite(mat, dims), q));
      },
      py::arg("rho"), py::arg("dims"), py::arg("q"),
      "Full per-(state, q) record as a dict.");
  m.def(
      "classical_ssa_check",
      [](const std::vector<Eigen::Index>& dims,
         const std::vector<double>& weights, double q) {
        if (dims.size() != 3) {
          throw std::invalid_argument("dims must have exactly three entries");
        }
        return classical_ssa_check(
            ProbabilityTensor(Dims3{dims[0], dims[1], dims[2]}, weights), q);
      },
      py::arg("dims"), py::arg("weights"), py::arg("q"),
      "Classical SSA deficit of a flat (row-major) probability tensor.");

  // Example states: (matrix, dims) pairs.
  m.def(
      "example_proposition",
      []() {
        TripartiteState t = example_proposition();
        return py::make_tuple(
            t.state().matrix(),
            std::vector<Eigen::Index>{t.dims().d1, t.dims().d2, t.dims().d3});
      },
      "The 8x8 counterexample state; deficit -0.25 at q = 2.");
  m.def(
      "example_bell_family",
      [](double p, double r, double theta, const ComplexMatrix& rho1) {
        TripartiteState t =
            example_bell_family(p, r, theta, DensityMatrix(rho1));
        return py::make_tuple(
            t.state().matrix(),
            std::vector<Eigen::Index>{t.dims().d1, t.dims().d2, t.dims().d3});
      },
      py::arg("p"), py::arg("r"), py::arg("theta"), py::arg("rho1"),
      "Rotated-Bell family member rho1 (x) V Lambda V^T.");

  // Sampling and search.
  m.def(
      "random_density",
      [](Eigen::Index dim, std::uint64_t seed) {
        Rng rng(seed);
        return random_density(dim, rng).matrix();
      },
      py::arg("dim"), py::arg("seed"),
      "One draw of the Gaussian (Hilbert-Schmidt-style) ensemble.");
  m.def(
      "search_violations",
      [](std::uint64_t seed, const std::vector<Eigen::Index>& dims,
         const std::string& ensemble, int samples, double q_start,
         double q_stop, double q_step, bool inject_proposition) {
        if (dims.size() != 3) {
          throw std::invalid_argument("dims must have exactly three entries");
        }
        SamplerConfig cfg;
        cfg.seed = seed;
        cfg.dims = Dims3{dims[0], dims[1], dims[2]};
        cfg.ensemble = parse_ensemble(ensemble);
        cfg.count = samples;
        cfg.q_grid = QGrid{q_start, q_stop, q_step};
        cfg.inject_proposition = inject_proposition;
        SearchResult result = search_violations(cfg);
        py::list findings;
        for (const Finding& f : result.findings) {
          py::dict row = report_to_dict(f.report);
          row["state_id"] = f.state_id;
          findings.append(row);
        }
        py::dict out;
        out["findings"] = findings;
        out["violation_count"] = result.violation_count;
        out["worst_deficit"] = result.worst_deficit;
        return out;
      },
      py::arg("seed"), py::arg("dims"), py::arg("ensemble"),
      py::arg("samples"), py::arg("q_start"), py::arg("q_stop"),
      py::arg("q_step"), py::arg("inject_proposition") = false,
      "Deterministic ensemble sweep; findings sorted worst-deficit first.");
}
