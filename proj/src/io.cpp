#include "qtsallis/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qtsallis {

namespace {

using nlohmann::json;

double parse_strict_double(const std::string& text, const char* what) {
  char* end = nullptr;
  double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') {
    throw std::runtime_error(std::string("invalid ") + what + " '" + text +
                             "'");
  }
  return v;
}

long parse_strict_long(const std::string& text, const char* what) {
  char* end = nullptr;
  long v = std::strtol(text.c_str(), &end, 10);
  if (end == text.c_str() || *end != '\0') {
    throw std::runtime_error(std::string("invalid ") + what + " '" + text +
                             "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

// Reads one real part ("re" or "im") as a square row-major grid.
Eigen::MatrixXd parse_part(const json& j, const char* key) {
  const json& rows = j.at(key);
  if (!rows.is_array() || rows.empty()) {
    throw std::runtime_error(std::string("\"") + key +
                             "\" must be a nonempty array of rows");
  }
  const size_t n = rows.size();
  Eigen::MatrixXd out(static_cast<Eigen::Index>(n),
                      static_cast<Eigen::Index>(n));
  for (size_t r = 0; r < n; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || row.size() != n) {
      throw std::runtime_error(std::string("\"") + key +
                               "\" must be square (row " + std::to_string(r) +
                               ")");
    }
    for (size_t c = 0; c < n; ++c) {
      if (!row[c].is_number()) {
        throw std::runtime_error(std::string("\"") + key +
                                 "\" entries must be numbers");
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          row[c].get<double>();
    }
  }
  return out;
}

}  // namespace

std::string format_double(double v, int precision) {
  if (std::isnan(v)) {
    return "nan";
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
  return buf;
}

StateDocument parse_matrix_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("invalid JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("state")) {
    j = j.at("state");
  }
  if (!j.is_object() || !j.contains("re")) {
    throw std::runtime_error("matrix document must contain \"re\"");
  }

  Eigen::MatrixXd re = parse_part(j, "re");
  StateDocument doc;
  doc.matrix = re.cast<std::complex<double>>();
  if (j.contains("im")) {
    Eigen::MatrixXd im = parse_part(j, "im");
    if (im.rows() != re.rows()) {
      throw std::runtime_error("\"im\" shape must match \"re\"");
    }
    doc.matrix.imag() = im;
  }

  if (j.contains("dims")) {
    const json& dims = j.at("dims");
    if (!dims.is_array() || dims.size() != 3) {
      throw std::runtime_error("\"dims\" must be [d1, d2, d3]");
    }
    Dims3 d;
    Eigen::Index* slots[3] = {&d.d1, &d.d2, &d.d3};
    for (size_t i = 0; i < 3; ++i) {
      if (!dims[i].is_number_integer() || dims[i].get<long>() < 1) {
        throw std::runtime_error("\"dims\" entries must be integers >= 1");
      }
      *slots[i] = dims[i].get<Eigen::Index>();
    }
    if (d.total() != doc.matrix.rows()) {
      throw std::runtime_error("\"dims\" product " + std::to_string(d.total()) +
                               " does not match matrix dimension " +
                               std::to_string(doc.matrix.rows()));
    }
    doc.dims = d;
  }
  return doc;
}

StateDocument load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_json(buf.str());
}

std::string matrix_to_json(const ComplexMatrix& m,
                           const std::optional<Dims3>& dims) {
  json j = json::object();
  if (dims) {
    j["dims"] = {dims->d1, dims->d2, dims->d3};
  }
  json re = json::array();
  json im = json::array();
  bool any_imag = false;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json re_row = json::array();
    json im_row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re_row.push_back(m(r, c).real());
      im_row.push_back(m(r, c).imag());
      any_imag = any_imag || m(r, c).imag() != 0.0;
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  j["re"] = std::move(re);
  if (any_imag) {
    j["im"] = std::move(im);
  }
  return j.dump();
}

DensityMatrix to_density(const StateDocument& doc) {
  return DensityMatrix(doc.matrix);
}

TripartiteState to_tripartite(const StateDocument& doc) {
  if (!doc.dims) {
    throw std::runtime_error(
        "state document must carry \"dims\" (factor dimensions) for "
        "tripartite commands");
  }
  return TripartiteState(*doc.dims, DensityMatrix(doc.matrix));
}

ProbabilityTensor to_probability_tensor(const StateDocument& doc) {
  if (!doc.dims) {
    throw std::runtime_error(
        "tensor document must carry \"dims\" (factor dimensions)");
  }
  const Eigen::Index n = doc.matrix.rows();
  std::vector<double> w(static_cast<size_t>(n));
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      if (r != c && std::abs(doc.matrix(r, c)) > 1e-12) {
        throw std::runtime_error(
            "classical tensor must be a diagonal matrix");
      }
    }
    if (std::abs(doc.matrix(r, r).imag()) > 1e-12) {
      throw std::runtime_error("diagonal entries must be real");
    }
    w[static_cast<size_t>(r)] = doc.matrix(r, r).real();
  }
  return ProbabilityTensor(*doc.dims, std::move(w));
}

const std::vector<std::string>& builtin_state_names() {
  static const std::vector<std::string> names = {
      "maximally-mixed-qubit", "pure-qubit", "bell", "proposition"};
  return names;
}

bool is_builtin_state(const std::string& name) {
  for (const std::string& n : builtin_state_names()) {
    if (n == name) {
      return true;
    }
  }
  return false;
}

StateDocument builtin_state(const std::string& name) {
  if (name == "maximally-mixed-qubit") {
    return {DensityMatrix::maximally_mixed(2).matrix(), std::nullopt};
  }
  if (name == "pure-qubit") {
    ComplexVector psi = ComplexVector::Zero(2);
    psi[0] = 1.0;
    return {DensityMatrix::pure(psi).matrix(), std::nullopt};
  }
  if (name == "bell") {
    return {bell_pair().state().matrix(), std::nullopt};
  }
  if (name == "proposition") {
    TripartiteState t = example_proposition();
    return {t.state().matrix(), t.dims()};
  }
  throw std::runtime_error("unknown builtin state '" + name + "'");
}

Dims3 parse_dims(const std::string& text) {
  std::vector<std::string> parts = split(text, ',');
  if (parts.size() != 3) {
    throw std::runtime_error("dims must have the form d1,d2,d3");
  }
  Dims3 d;
  Eigen::Index* slots[3] = {&d.d1, &d.d2, &d.d3};
  for (size_t i = 0; i < 3; ++i) {
    long v = parse_strict_long(parts[i], "dimension");
    if (v < 1) {
      throw std::runtime_error("dimensions must be >= 1");
    }
    *slots[i] = v;
  }
  return d;
}

QGrid parse_q_grid(const std::string& text) {
  std::vector<std::string> parts = split(text, ':');
  QGrid g;
  if (parts.size() == 1) {
    g.start = g.stop = parse_strict_double(parts[0], "q value");
    g.step = 1.0;
  } else if (parts.size() == 3) {
    g.start = parse_strict_double(parts[0], "q grid start");
    g.stop = parse_strict_double(parts[1], "q grid stop");
    g.step = parse_strict_double(parts[2], "q grid step");
  } else {
    throw std::runtime_error("q grid must have the form start:stop:step");
  }
  return g;
}

std::string deficit_csv_header(bool all_theorems) {
  std::string head = "q,S123,S12,S23,S2,deficit";
  if (all_theorems) {
    head +=
        ",thm1_lhs,thm1_rhs,thm2_rhs,thm3_commutes,thm3_dominance,"
        "bound_min_expr,bound_dim";
  }
  return head;
}

std::string deficit_csv_row(const DeficitReport& r, bool all_theorems) {
  std::ostringstream out;
  out << format_double(r.q) << ',' << format_double(r.s123) << ','
      << format_double(r.s12) << ',' << format_double(r.s23) << ','
      << format_double(r.s2) << ',' << format_double(r.deficit);
  if (all_theorems) {
    out << ',' << format_double(r.thm1_lhs) << ','
        << format_double(r.thm1_rhs) << ',' << format_double(r.thm2_rhs)
        << ',' << (r.thm3_commutes ? 1 : 0) << ','
        << (r.thm3_dominance ? 1 : 0) << ','
        << format_double(r.bound_min_expr) << ','
        << format_double(r.bound_dim);
  }
  return out.str();
}

std::string deficit_report_to_json(const DeficitReport& r) {
  json j = json::object();
  j["q"] = r.q;
  j["S123"] = r.s123;
  j["S12"] = r.s12;
  j["S23"] = r.s23;
  j["S2"] = r.s2;
  j["deficit"] = r.deficit;
  j["thm1_lhs"] = r.thm1_lhs;
  j["thm1_rhs"] = r.thm1_rhs;
  j["thm2_lhs"] = r.thm2_lhs;
  j["thm2_rhs"] = r.thm2_rhs;
  j["thm3_commutes"] = r.thm3_commutes;
  j["thm3_dominance"] = r.thm3_dominance;
  j["bound_min_expr"] = r.bound_min_expr;
  j["bound_dim"] = r.bound_dim;
  j["bound_dim_alt"] = r.bound_dim_alt;
  j["regularization_epsilon"] = r.regularization_epsilon;
  j["violation"] = r.violation;
  return j.dump();
}

std::string findings_csv_header() {
  return "state_id,ensemble,seed,d1,d2,d3,q,S123,S12,S23,S2,deficit,"
         "thm1_lhs,thm1_rhs,thm2_rhs,thm3_commutes,thm3_dominance,"
         "bound_min_expr,bound_dim";
}

std::string findings_csv_row(const Finding& f, const SamplerConfig& cfg) {
  const DeficitReport& r = f.report;
  std::ostringstream out;
  out << f.state_id << ',' << ensemble_name(cfg.ensemble) << ',' << cfg.seed
      << ',' << cfg.dims.d1 << ',' << cfg.dims.d2 << ',' << cfg.dims.d3
      << ',' << format_double(r.q) << ',' << format_double(r.s123) << ','
      << format_double(r.s12) << ',' << format_double(r.s23) << ','
      << format_double(r.s2) << ',' << format_double(r.deficit) << ','
      << format_double(r.thm1_lhs) << ',' << format_double(r.thm1_rhs)
      << ',' << format_double(r.thm2_rhs) << ','
      << (r.thm3_commutes ? 1 : 0) << ',' << (r.thm3_dominance ? 1 : 0)
      << ',' << format_double(r.bound_min_expr) << ','
      << format_double(r.bound_dim);
  return out.str();
}

}  // namespace qtsallis
