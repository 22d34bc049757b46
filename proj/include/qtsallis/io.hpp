#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtsallis/entropy.hpp"
#include "qtsallis/linalg.hpp"
#include "qtsallis/sampler.hpp"
#include "qtsallis/ssa.hpp"

namespace qtsallis {

/// %.*g formatting; NaN normalizes to "nan". precision 17 round-trips
/// doubles exactly.
std::string format_double(double v, int precision = 17);

/// A parsed matrix document: entries plus optional factor dimensions.
struct StateDocument {
  ComplexMatrix matrix;
  std::optional<Dims3> dims;
};

/// Matrix JSON: {"dims": [d1,d2,d3] (optional), "re": [[...]],
/// "im": [[...]] (optional; all-zero when omitted)}. A document with a
/// top-level "state" key (as emitted next to repro reports) unwraps to
/// its state.
StateDocument parse_matrix_json(const std::string& text);
StateDocument load_matrix_file(const std::string& path);
std::string matrix_to_json(const ComplexMatrix& m,
                           const std::optional<Dims3>& dims);

/// Interpretations of a document; each validates what it needs.
DensityMatrix to_density(const StateDocument& doc);
/// Requires "dims".
TripartiteState to_tripartite(const StateDocument& doc);
/// Requires "dims" and a diagonal matrix (off-diagonals <= 1e-12).
ProbabilityTensor to_probability_tensor(const StateDocument& doc);

/// Built-in states usable wherever a state file is expected:
/// maximally-mixed-qubit, pure-qubit, bell, proposition.
bool is_builtin_state(const std::string& name);
StateDocument builtin_state(const std::string& name);
const std::vector<std::string>& builtin_state_names();

/// "d1,d2,d3" with positive integer entries.
Dims3 parse_dims(const std::string& text);
/// "start:stop:step", or a single value for a one-point grid.
QGrid parse_q_grid(const std::string& text);

/// Per-q rows for the ssa-check and repro commands. The short form ends
/// at the deficit; all_theorems appends the theorem and bound columns.
std::string deficit_csv_header(bool all_theorems);
std::string deficit_csv_row(const DeficitReport& r, bool all_theorems);
/// Full record as a JSON object (NaN cells serialize as null).
std::string deficit_report_to_json(const DeficitReport& r);

/// Findings CSV (search command): state_id, ensemble, seed, d1, d2, d3,
/// q, S123, S12, S23, S2, deficit, thm1_lhs, thm1_rhs, thm2_rhs,
/// thm3_commutes, thm3_dominance, bound_min_expr, bound_dim.
std::string findings_csv_header();
std::string findings_csv_row(const Finding& f, const SamplerConfig& cfg);

}  // namespace qtsallis
