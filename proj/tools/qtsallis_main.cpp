// qtsallis command-line front end.
//
// Subcommands:
//   entropy          S_q of a state (file, "-" for stdin, or builtin name)
//   quasi            relative quasi-entropy S_f^A(rho||sigma)
//   ssa-check        SSA deficit rows over a q or q-grid; exit 1 on violation
//   repro            emit a named example state and its report
//   search           sample an ensemble and rank deficits (findings CSV)
//   classical-check  SSA for a diagonal (probability-tensor) state
//
// Exit codes: 0 success / no violation, 1 violation found (ssa-check,
// classical-check, search), 2 input or usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qtsallis/entropy.hpp"
#include "qtsallis/io.hpp"
#include "qtsallis/linalg.hpp"
#include "qtsallis/qcalculus.hpp"
#include "qtsallis/quasi_entropy.hpp"
#include "qtsallis/sampler.hpp"
#include "qtsallis/ssa.hpp"

namespace {

using namespace qtsallis;

std::string read_stream(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

/// "-" -> stdin, builtin name -> generated document, else file path.
StateDocument resolve_state(const std::string& arg) {
  if (arg == "-") {
    return parse_matrix_json(read_stream(std::cin));
  }
  if (is_builtin_state(arg)) {
    return builtin_state(arg);
  }
  return load_matrix_file(arg);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path);
  }
  out << text;
  if (!out.flush()) {
    throw std::runtime_error("write failed: " + path);
  }
}

/// The q values of either --q or --q-grid (exactly one must be given).
std::vector<double> q_values(const std::optional<double>& q,
                             const std::string& grid) {
  if (q.has_value() == !grid.empty()) {
    throw std::runtime_error("exactly one of --q or --q-grid is required");
  }
  if (q) {
    if (*q <= 0.0) {
      throw std::runtime_error("--q must be positive");
    }
    return {*q};
  }
  return parse_q_grid(grid).values();
}

int cmd_entropy(const std::string& state_arg, double q) {
  DensityMatrix d = to_density(resolve_state(state_arg));
  std::cout << format_double(tsallis_entropy(d, q), 15) << "\n";
  return 0;
}

int cmd_quasi(const std::string& rho_arg, const std::string& sigma_arg,
              const std::string& weight_arg, const std::string& f_name,
              double q, double exponent, bool use_oracle) {
  DensityMatrix rho = to_density(resolve_state(rho_arg));
  ComplexMatrix sigma = resolve_state(sigma_arg).matrix;
  ComplexMatrix weight =
      weight_arg.empty()
          ? ComplexMatrix(ComplexMatrix::Identity(rho.dim(), rho.dim()))
          : resolve_state(weight_arg).matrix;

  QScalarFunction f = QScalarFunction::neg_ln_q(q);
  if (f_name == "neg-ln-q") {
    f = QScalarFunction::neg_ln_q(q);
  } else if (f_name == "ln-q") {
    f = QScalarFunction::ln_q(q);
  } else if (f_name == "big-ln-q") {
    f = QScalarFunction::big_ln_q(q);
  } else if (f_name == "power") {
    f = QScalarFunction::power(exponent);
  } else {
    throw std::runtime_error("unknown --f: " + f_name +
                             " (expected neg-ln-q, ln-q, big-ln-q, power)");
  }

  QuasiEntropyInput in(std::move(rho), std::move(sigma), std::move(weight),
                       f);
  double value =
      use_oracle ? quasi_entropy_superop_oracle(in) : quasi_entropy_spectral(in);
  std::cout << format_double(value, 15) << "\n";
  return 0;
}

int cmd_ssa_check(const std::string& state_arg,
                  const std::optional<double>& q, const std::string& grid,
                  bool all_theorems, bool as_json) {
  std::vector<double> qs = q_values(q, grid);
  TripartiteState t = to_tripartite(resolve_state(state_arg));

  bool violation = false;
  if (!as_json) {
    std::cout << deficit_csv_header(all_theorems) << "\n";
  }
  for (double qv : qs) {
    DeficitReport r = make_deficit_report(t, qv);
    violation = violation || r.violation;
    if (as_json) {
      std::cout << deficit_report_to_json(r) << "\n";
    } else {
      std::cout << deficit_csv_row(r, all_theorems) << "\n";
    }
  }
  return violation ? 1 : 0;
}

/// Named example states for the repro command.
TripartiteState repro_state(const std::string& name, double p, double r,
                            double theta, std::uint64_t seed) {
  if (name == "proposition") {
    return example_proposition();
  }
  if (name == "entangled-product") {
    return example_entangled_product(bell_pair(),
                                     DensityMatrix::maximally_mixed(2));
  }
  if (name == "bell-family") {
    Rng rng(seed);
    DensityMatrix rho1 =
        seed == 0 ? DensityMatrix::maximally_mixed(2) : random_density(2, rng);
    return example_bell_family(p, r, theta, rho1);
  }
  if (name == "diag4") {
    return example_diag4_state(0.4, 0.3, 0.2, 0.1);
  }
  throw std::runtime_error(
      "unknown repro name: " + name +
      " (expected proposition, entangled-product, bell-family, diag4)");
}

int cmd_repro(const std::string& name, double p, double r, double theta,
              std::uint64_t seed, const std::string& grid,
              const std::string& out_path, const std::string& report_path) {
  TripartiteState t = repro_state(name, p, r, theta, seed);
  std::vector<double> qs = parse_q_grid(grid).values();

  std::string state_json = matrix_to_json(t.state().matrix(), t.dims());
  std::ostringstream report;
  report << deficit_csv_header(/*all_theorems=*/true) << "\n";
  for (double qv : qs) {
    report << deficit_csv_row(make_deficit_report(t, qv),
                              /*all_theorems=*/true)
           << "\n";
  }

  if (out_path.empty()) {
    std::cout << state_json << "\n";
  } else {
    write_text(out_path, state_json + "\n");
  }
  if (report_path.empty()) {
    // Keep stdout clean for the state JSON; the report goes to stderr
    // unless a file is requested.
    std::cerr << report.str();
  } else {
    write_text(report_path, report.str());
  }
  return 0;
}

int cmd_search(std::uint64_t seed, const std::string& dims_text,
               const std::string& ensemble_name_text, int samples,
               const std::string& grid, bool inject_proposition,
               const std::string& out_path) {
  SamplerConfig cfg;
  cfg.seed = seed;
  cfg.dims = parse_dims(dims_text);
  cfg.ensemble = parse_ensemble(ensemble_name_text);
  cfg.count = samples;
  cfg.q_grid = parse_q_grid(grid);
  cfg.inject_proposition = inject_proposition;

  SearchResult result = search_violations(cfg);

  std::ostringstream csv;
  csv << findings_csv_header() << "\n";
  for (const Finding& f : result.findings) {
    csv << findings_csv_row(f, cfg) << "\n";
  }

  std::ostringstream summary;
  summary << "states=" << cfg.count << " cells=" << result.findings.size()
          << " violations=" << result.violation_count
          << " worst_deficit=" << format_double(result.worst_deficit) << "\n";

  if (out_path.empty()) {
    std::cout << csv.str();
    std::cerr << summary.str();
  } else {
    write_text(out_path, csv.str());
    std::cout << summary.str();
  }
  return result.violation_count > 0 ? 1 : 0;
}

int cmd_classical_check(const std::string& state_arg,
                        const std::optional<double>& q,
                        const std::string& grid) {
  std::vector<double> qs = q_values(q, grid);
  ProbabilityTensor p = to_probability_tensor(resolve_state(state_arg));

  bool violation = false;
  std::cout << "q,deficit\n";
  for (double qv : qs) {
    double deficit = classical_ssa_check(p, qv);
    violation = violation || deficit < kViolationThreshold;
    std::cout << format_double(qv) << "," << format_double(deficit) << "\n";
  }
  return violation ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tsallis entropy and strong-subadditivity toolkit"};
  app.require_subcommand(1);

  // entropy
  std::string ent_state;
  double ent_q = 1.0;
  CLI::App* entropy = app.add_subcommand("entropy", "S_q of a state");
  entropy->add_option("state", ent_state,
                      "state JSON file, '-' for stdin, or builtin name")
      ->required();
  entropy->add_option("--q", ent_q, "entropic index q > 0")->required();

  // quasi
  std::string quasi_rho, quasi_sigma, quasi_weight, quasi_f = "neg-ln-q";
  double quasi_q = 2.0, quasi_exponent = 1.0;
  bool quasi_oracle = false;
  CLI::App* quasi =
      app.add_subcommand("quasi", "relative quasi-entropy S_f^A(rho||sigma)");
  quasi->add_option("--rho", quasi_rho, "first argument (density matrix)")
      ->required();
  quasi->add_option("--sigma", quasi_sigma,
                    "second argument (Hermitian PSD, any trace)")
      ->required();
  quasi->add_option("--weight", quasi_weight,
                    "weight matrix A (default: identity)");
  quasi->add_option("--f", quasi_f,
                    "scalar function: neg-ln-q, ln-q, big-ln-q, power");
  quasi->add_option("--q", quasi_q, "entropic index for the ln_q family");
  quasi->add_option("--exponent", quasi_exponent, "exponent for --f power");
  quasi->add_flag("--oracle", quasi_oracle,
                  "evaluate via the superoperator oracle");

  // ssa-check
  std::string ssa_state, ssa_grid;
  std::optional<double> ssa_q;
  bool ssa_all = false, ssa_json = false;
  CLI::App* ssa = app.add_subcommand(
      "ssa-check", "SSA deficit rows; exit 1 when a violation is found");
  ssa->add_option("state", ssa_state,
                  "state JSON file, '-' for stdin, or builtin name")
      ->required();
  ssa->add_option("--q", ssa_q, "single q value");
  ssa->add_option("--q-grid", ssa_grid, "grid start:stop:step");
  ssa->add_flag("--all-theorems", ssa_all,
                "append theorem and bound columns");
  ssa->add_flag("--json", ssa_json, "one JSON object per row");

  // repro
  std::string repro_name, repro_grid = "0.25:3:0.25", repro_out,
              repro_report;
  double repro_p = 0.5, repro_r = 0.5, repro_theta = 0.0;
  std::uint64_t repro_seed = 0;
  CLI::App* repro = app.add_subcommand(
      "repro", "emit a named example state and its deficit report");
  repro->add_option("name", repro_name,
                    "proposition, entangled-product, bell-family, diag4")
      ->required();
  repro->add_option("--p", repro_p, "bell-family weight p in [1/2, 1]");
  repro->add_option("--r", repro_r, "bell-family weight r in [1/2, 1]");
  repro->add_option("--theta", repro_theta, "bell-family rotation angle");
  repro->add_option("--seed", repro_seed,
                    "bell-family rho1 seed (0 = maximally mixed)");
  repro->add_option("--q-grid", repro_grid, "report grid start:stop:step");
  repro->add_option("--out", repro_out, "write the state JSON here");
  repro->add_option("--report-out", repro_report,
                    "write the report CSV here (default: stderr)");

  // search
  std::string search_dims = "2,2,2", search_ensemble = "hilbert-schmidt",
              search_grid = "0.25:3:0.25", search_out;
  std::uint64_t search_seed = 1;
  int search_samples = 100;
  bool search_inject = false;
  CLI::App* search = app.add_subcommand(
      "search", "sample an ensemble and rank SSA deficits");
  search->add_option("--seed", search_seed, "random seed");
  search->add_option("--dims", search_dims, "factor dimensions d1,d2,d3");
  search->add_option("--ensemble", search_ensemble,
                     "hilbert-schmidt, pure, classical-diagonal, bell-family");
  search->add_option("--samples", search_samples, "number of states")
      ->check(CLI::PositiveNumber);
  search->add_option("--q-grid", search_grid, "grid start:stop:step");
  search->add_flag("--inject-proposition", search_inject,
                   "evaluate the 8x8 counterexample as state_id 0");
  search->add_option("--out", search_out,
                     "write the findings CSV here (default: stdout)");

  // classical-check
  std::string cls_state, cls_grid;
  std::optional<double> cls_q;
  CLI::App* classical = app.add_subcommand(
      "classical-check", "SSA deficit of a diagonal (classical) state");
  classical->add_option("state", cls_state,
                        "diagonal tripartite state JSON (needs dims)")
      ->required();
  classical->add_option("--q", cls_q, "single q value (q >= 1)");
  classical->add_option("--q-grid", cls_grid, "grid start:stop:step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*entropy) {
      return cmd_entropy(ent_state, ent_q);
    }
    if (*quasi) {
      return cmd_quasi(quasi_rho, quasi_sigma, quasi_weight, quasi_f, quasi_q,
                       quasi_exponent, quasi_oracle);
    }
    if (*ssa) {
      return cmd_ssa_check(ssa_state, ssa_q, ssa_grid, ssa_all, ssa_json);
    }
    if (*repro) {
      return cmd_repro(repro_name, repro_p, repro_r, repro_theta, repro_seed,
                       repro_grid, repro_out, repro_report);
    }
    if (*search) {
      return cmd_search(search_seed, search_dims, search_ensemble,
                        search_samples, search_grid, search_inject,
                        search_out);
    }
    if (*classical) {
      return cmd_classical_check(cls_state, cls_q, cls_grid);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
