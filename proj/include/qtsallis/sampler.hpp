#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qtsallis/entropy.hpp"
#include "qtsallis/linalg.hpp"
#include "qtsallis/ssa.hpp"

namespace qtsallis {

/// Deterministic random stream: mt19937_64 words mapped to uniforms and
/// Box-Muller normals by explicit arithmetic, so the draw sequence is
/// identical on every platform (std::normal_distribution is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal (Box-Muller pair, cached spare).
  double normal();

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// G G* / Tr(G G*) for G with iid complex Gaussian entries; full rank
/// with probability 1.
DensityMatrix random_density(Eigen::Index dim, Rng& rng);

/// Normalized Gaussian vector as a rank-1 projector.
DensityMatrix random_pure(Eigen::Index dim, Rng& rng);

/// Flat random point of the probability simplex over the index grid
/// (normalized iid exponentials).
ProbabilityTensor random_probability_tensor(const Dims3& dims, Rng& rng);

enum class Ensemble { HilbertSchmidt, Pure, ClassicalDiagonal, BellFamily };

/// CLI-facing names: hilbert-schmidt, pure, classical-diagonal,
/// bell-family.
std::string ensemble_name(Ensemble e);
Ensemble parse_ensemble(const std::string& name);

/// Inclusive arithmetic grid start, start+step, ..., stop (endpoints
/// matched within 1e-12).
struct QGrid {
  double start = 1.0;
  double stop = 1.0;
  double step = 1.0;

  /// Validates start > 0, step > 0, stop >= start and expands the grid.
  std::vector<double> values() const;
};

struct SamplerConfig {
  std::uint64_t seed = 1;
  Dims3 dims{2, 2, 2};
  Ensemble ensemble = Ensemble::HilbertSchmidt;
  int count = 100;
  QGrid q_grid;
  /// When set, the 8x8 counterexample state is evaluated first as
  /// state_id 0 (sampled states are ids 1..count).
  bool inject_proposition = false;
};

/// One state draw from the configured ensemble. bell-family requires
/// dims (d1, 2, 2) and samples (p, r, theta, rho1) with the constraint
/// p r <= 1 - r built in.
TripartiteState sample_state(const SamplerConfig& cfg, Rng& rng);

struct Finding {
  std::int64_t state_id = 0;
  DeficitReport report;
};

struct SearchResult {
  SamplerConfig config;
  /// Every (state, q) cell, sorted ascending by
  /// (deficit, state_id, q) -- worst violation first.
  std::vector<Finding> findings;
  std::size_t violation_count = 0;
  /// Smallest deficit encountered (first finding after sorting).
  double worst_deficit = 0.0;
};

/// Evaluation concurrency: hardware threads capped by QTSALLIS_THREADS
/// (integer >= 1) when set; always >= 1. Malformed values are rejected.
int evaluation_thread_cap();

/// Samples cfg.count states, evaluates a DeficitReport on every grid q
/// (cells run on evaluation_thread_cap() threads; results are merged in
/// deterministic (state_id, q) order before sorting), and ranks the
/// rows by ascending deficit. Identical config => identical result.
SearchResult search_violations(const SamplerConfig& cfg);

}  // namespace qtsallis
