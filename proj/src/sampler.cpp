#include "qtsallis/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace qtsallis {

double Rng::uniform() {
  // Top 53 bits of the 64-bit word, scaled to [0, 1).
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = 1.0 - uniform();  // (0, 1]: keeps the log finite
  double u2 = uniform();
  double radius = std::sqrt(-2.0 * std::log(u1));
  double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

DensityMatrix random_density(Eigen::Index dim, Rng& rng) {
  if (dim < 1) {
    throw std::invalid_argument("dimension must be >= 1");
  }
  ComplexMatrix g(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      double re = rng.normal();
      double im = rng.normal();
      g(r, c) = std::complex<double>(re, im);
    }
  }
  ComplexMatrix m = g * g.adjoint();
  m = ((m + m.adjoint()) / 2.0).eval();  // scrub roundoff asymmetry
  return DensityMatrix(m / m.trace().real());
}

DensityMatrix random_pure(Eigen::Index dim, Rng& rng) {
  if (dim < 1) {
    throw std::invalid_argument("dimension must be >= 1");
  }
  ComplexVector psi(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    double re = rng.normal();
    double im = rng.normal();
    psi[i] = std::complex<double>(re, im);
  }
  return DensityMatrix::pure(psi);
}

ProbabilityTensor random_probability_tensor(const Dims3& dims, Rng& rng) {
  std::vector<double> w(static_cast<size_t>(dims.total()));
  double sum = 0.0;
  for (double& x : w) {
    x = -std::log(1.0 - rng.uniform());  // iid exponentials
    sum += x;
  }
  for (double& x : w) {
    x /= sum;
  }
  return ProbabilityTensor(dims, std::move(w));
}

std::string ensemble_name(Ensemble e) {
  switch (e) {
    case Ensemble::HilbertSchmidt:
      return "hilbert-schmidt";
    case Ensemble::Pure:
      return "pure";
    case Ensemble::ClassicalDiagonal:
      return "classical-diagonal";
    case Ensemble::BellFamily:
      return "bell-family";
  }
  throw std::logic_error("unreachable ensemble");
}

Ensemble parse_ensemble(const std::string& name) {
  for (Ensemble e : {Ensemble::HilbertSchmidt, Ensemble::Pure,
                     Ensemble::ClassicalDiagonal, Ensemble::BellFamily}) {
    if (ensemble_name(e) == name) {
      return e;
    }
  }
  throw std::invalid_argument("unknown ensemble '" + name + "'");
}

std::vector<double> QGrid::values() const {
  if (!(start > 0.0)) {
    throw std::invalid_argument("q grid must start above 0");
  }
  if (!(step > 0.0)) {
    throw std::invalid_argument("q grid step must be positive");
  }
  if (stop < start - 1e-12) {
    throw std::invalid_argument("q grid stop must be >= start");
  }
  std::vector<double> out;
  for (int i = 0; ; ++i) {
    double v = start + static_cast<double>(i) * step;
    if (v > stop + 1e-12) {
      break;
    }
    out.push_back(v);
  }
  return out;
}

TripartiteState sample_state(const SamplerConfig& cfg, Rng& rng) {
  switch (cfg.ensemble) {
    case Ensemble::HilbertSchmidt:
      return TripartiteState(cfg.dims,
                             random_density(cfg.dims.total(), rng));
    case Ensemble::Pure:
      return TripartiteState(cfg.dims, random_pure(cfg.dims.total(), rng));
    case Ensemble::ClassicalDiagonal:
      return random_probability_tensor(cfg.dims, rng).diagonal_embedding();
    case Ensemble::BellFamily: {
      if (cfg.dims.d2 != 2 || cfg.dims.d3 != 2) {
        throw std::invalid_argument(
            "bell-family ensemble requires dims (d1, 2, 2)");
      }
      double p = 0.5 + 0.5 * rng.uniform();
      double r_max = 1.0 / (1.0 + p);  // p r <= 1-r  <=>  r <= 1/(1+p)
      double r = 0.5 + (r_max - 0.5) * rng.uniform();
      double theta = std::numbers::pi * rng.uniform();
      DensityMatrix rho1 = random_density(cfg.dims.d1, rng);
      return example_bell_family(p, r, theta, rho1);
    }
  }
  throw std::logic_error("unreachable ensemble");
}

int evaluation_thread_cap() {
  unsigned hw = std::thread::hardware_concurrency();
  int cap = hw == 0 ? 1 : static_cast<int>(hw);
  if (const char* env = std::getenv("QTSALLIS_THREADS")) {
    char* end = nullptr;
    long parsed = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || parsed < 1) {
      throw std::invalid_argument(
          "QTSALLIS_THREADS must be an integer >= 1, got '" +
          std::string(env) + "'");
    }
    cap = static_cast<int>(std::min<long>(cap, parsed));
  }
  return cap;
}

SearchResult search_violations(const SamplerConfig& cfg) {
  if (cfg.count < 1) {
    throw std::invalid_argument("sample count must be >= 1");
  }
  std::vector<double> qs = cfg.q_grid.values();

  Rng rng(cfg.seed);
  std::vector<std::pair<std::int64_t, TripartiteState>> states;
  states.reserve(static_cast<size_t>(cfg.count) + 1);
  if (cfg.inject_proposition) {
    states.emplace_back(0, example_proposition());
  }
  for (int i = 1; i <= cfg.count; ++i) {
    states.emplace_back(i, sample_state(cfg, rng));
  }

  // Cells are independent pure evaluations written to fixed slots, so
  // any scheduling yields the same findings vector.
  const size_t n_cells = states.size() * qs.size();
  std::vector<Finding> findings(n_cells);
  auto eval_cell = [&](size_t c) {
    const auto& [id, state] = states[c / qs.size()];
    findings[c] = Finding{id, make_deficit_report(state, qs[c % qs.size()])};
  };

  int n_threads = static_cast<int>(
      std::min<size_t>(static_cast<size_t>(evaluation_thread_cap()), n_cells));
  if (n_threads <= 1) {
    for (size_t c = 0; c < n_cells; ++c) {
      eval_cell(c);
    }
  } else {
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      try {
        for (size_t c = next.fetch_add(1); c < n_cells;
             c = next.fetch_add(1)) {
          eval_cell(c);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(n_threads));
    for (int i = 0; i < n_threads; ++i) {
      pool.emplace_back(worker);
    }
    for (std::thread& th : pool) {
      th.join();
    }
    if (failure) {
      std::rethrow_exception(failure);
    }
  }

  std::sort(findings.begin(), findings.end(),
            [](const Finding& a, const Finding& b) {
              return std::make_tuple(a.report.deficit, a.state_id,
                                     a.report.q) <
                     std::make_tuple(b.report.deficit, b.state_id,
                                     b.report.q);
            });

  SearchResult out;
  out.config = cfg;
  out.findings = std::move(findings);
  out.worst_deficit = out.findings.front().report.deficit;
  for (const Finding& f : out.findings) {
    if (f.report.violation) {
      ++out.violation_count;
    }
  }
  return out;
}

}  // namespace qtsallis
