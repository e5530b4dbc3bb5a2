#include "signalgame/json_io.hpp"

#include <cmath>
#include <limits>

#include "json.hpp"
#include "signalgame/scenario_file.hpp"

namespace signalgame::json_io {

using json = nlohmann::ordered_json;

namespace {

json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

double read_number(const json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

json vector_json(const Vector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(number(v(i)));
  return arr;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(number(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Vector read_vector(const json& j) {
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = read_number(j[i]);
  return v;
}

Matrix read_matrix(const json& j) {
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (static_cast<Eigen::Index>(row.size()) != cols) {
      throw Error(ErrorKind::ParseError, "ragged matrix in result document");
    }
    for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = read_number(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

json header(std::string_view kind) {
  json doc;
  doc["schema"] = kSchemaTag;
  doc["kind"] = kind;
  return doc;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json parse_doc(std::string_view text, std::string_view kind) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.value("schema", "") != kSchemaTag) {
    throw Error(ErrorKind::ParseError, "missing or unsupported schema tag");
  }
  if (doc.value("kind", "") != kind) {
    throw Error(ErrorKind::ParseError, "expected a '" + std::string(kind) + "' document");
  }
  return doc;
}

Regime read_regime(const json& j) {
  const auto r = parse_regime(j.get<std::string>());
  if (!r) throw Error(ErrorKind::ParseError, "unknown regime '" + j.get<std::string>() + "'");
  return *r;
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed result document: ") + e.what());
  }
}

json batch_json(const simulate::BatchMoments& b) {
  return json{{"count", b.count},
              {"Sigma_u", matrix_json(b.Sigma_u)},
              {"Sigma_e", matrix_json(b.Sigma_e)},
              {"cross", matrix_json(b.cross)},
              {"decoder_cost", number(b.decoder_cost)},
              {"encoder_cost", number(b.encoder_cost)},
              {"power", number(b.power)}};
}

}  // namespace

std::string to_json(const cheaptalk::EquilibriumSolution& sol) {
  json doc = header("equilibrium");
  doc["dim"] = sol.V.dim();
  doc["regime"] = to_string(sol.regime);
  doc["degenerate"] = sol.degenerate;
  doc["k"] = sol.k;
  doc["V"] = matrix_json(sol.V.mat());
  doc["B"] = matrix_json(sol.B.mat());
  doc["eigenvalues"] = vector_json(sol.eig.values);
  doc["eigenvectors"] = matrix_json(sol.eig.vectors);
  doc["Pi_star"] = matrix_json(sol.Pi_star.mat());
  doc["Sigma_u_star"] = matrix_json(sol.Sigma_u_star.mat());
  doc["L"] = matrix_json(sol.L);
  doc["encoder_cost"] = number(sol.encoder_cost);
  doc["decoder_cost"] = number(sol.decoder_cost);
  return dump(doc);
}

std::string to_json(const noisy::PowerSolution& sol) {
  json doc = header("power-solution");
  doc["regime"] = to_string(sol.regime);
  doc["certified"] = sol.certified;
  doc["P_star"] = number(sol.P_star);
  doc["rho_threshold"] = number(sol.rho_threshold);
  doc["fP_star"] = number(sol.fP_star);
  doc["alpha"] = number(sol.alpha);
  return dump(doc);
}

std::string to_json(const channel::WaterFillResult& wf) {
  json doc = header("waterfill");
  doc["nu"] = number(wf.nu);
  doc["powers"] = vector_json(wf.powers);
  doc["capacity_bits"] = number(wf.capacity_bits);
  doc["noise_eigs"] = vector_json(wf.noise_eigs);
  return dump(doc);
}

std::string to_json(const simulate::SimReport& r) {
  json doc = header("sim-report");
  doc["samples"] = r.samples;
  doc["seed"] = r.seed;
  doc["emp_Sigma_u"] = matrix_json(r.emp_Sigma_u.mat());
  doc["emp_Sigma_e"] = matrix_json(r.emp_Sigma_e.mat());
  doc["emp_cross"] = matrix_json(r.emp_cross);
  doc["emp_decoder_cost"] = number(r.emp_decoder_cost);
  doc["emp_encoder_cost"] = number(r.emp_encoder_cost);
  doc["emp_power"] = number(r.emp_power);
  doc["ortho_residual"] = number(r.ortho_residual);
  doc["stderr"] = json{{"decoder_cost", number(r.stderr_decoder_cost)},
                       {"encoder_cost", number(r.stderr_encoder_cost)},
                       {"power", number(r.stderr_power)},
                       {"ortho", number(r.stderr_ortho)}};
  json batches = json::array();
  for (const auto& b : r.batches) batches.push_back(batch_json(b));
  doc["batches"] = std::move(batches);
  return dump(doc);
}

cheaptalk::EquilibriumSolution equilibrium_from_json(std::string_view text) {
  const json doc = parse_doc(text, "equilibrium");
  return guarded([&] {
    cheaptalk::EquilibriumSolution sol;
    sol.regime = read_regime(doc.at("regime"));
    sol.degenerate = doc.at("degenerate").get<bool>();
    sol.k = doc.at("k").get<int>();
    sol.V = SymMatrix(read_matrix(doc.at("V")));
    sol.B = SymMatrix(read_matrix(doc.at("B")));
    sol.eig.values = read_vector(doc.at("eigenvalues"));
    sol.eig.vectors = read_matrix(doc.at("eigenvectors"));
    sol.Pi_star = SymMatrix(read_matrix(doc.at("Pi_star")));
    sol.Sigma_u_star = SymMatrix(read_matrix(doc.at("Sigma_u_star")));
    sol.L = read_matrix(doc.at("L"));
    sol.encoder_cost = read_number(doc.at("encoder_cost"));
    sol.decoder_cost = read_number(doc.at("decoder_cost"));
    return sol;
  });
}

noisy::PowerSolution power_from_json(std::string_view text) {
  const json doc = parse_doc(text, "power-solution");
  return guarded([&] {
    noisy::PowerSolution sol;
    sol.regime = read_regime(doc.at("regime"));
    sol.certified = doc.at("certified").get<bool>();
    sol.P_star = read_number(doc.at("P_star"));
    sol.rho_threshold = read_number(doc.at("rho_threshold"));
    sol.fP_star = read_number(doc.at("fP_star"));
    sol.alpha = read_number(doc.at("alpha"));
    return sol;
  });
}

channel::WaterFillResult waterfill_from_json(std::string_view text) {
  const json doc = parse_doc(text, "waterfill");
  return guarded([&] {
    channel::WaterFillResult wf;
    wf.nu = read_number(doc.at("nu"));
    wf.powers = read_vector(doc.at("powers"));
    wf.capacity_bits = read_number(doc.at("capacity_bits"));
    wf.noise_eigs = read_vector(doc.at("noise_eigs"));
    return wf;
  });
}

simulate::SimReport sim_report_from_json(std::string_view text) {
  const json doc = parse_doc(text, "sim-report");
  return guarded([&] {
    simulate::SimReport r;
    r.samples = doc.at("samples").get<std::uint64_t>();
    r.seed = doc.at("seed").get<std::uint64_t>();
    r.emp_Sigma_u = SymMatrix(read_matrix(doc.at("emp_Sigma_u")));
    r.emp_Sigma_e = SymMatrix(read_matrix(doc.at("emp_Sigma_e")));
    r.emp_cross = read_matrix(doc.at("emp_cross"));
    r.emp_decoder_cost = read_number(doc.at("emp_decoder_cost"));
    r.emp_encoder_cost = read_number(doc.at("emp_encoder_cost"));
    r.emp_power = read_number(doc.at("emp_power"));
    r.ortho_residual = read_number(doc.at("ortho_residual"));
    const json& se = doc.at("stderr");
    r.stderr_decoder_cost = read_number(se.at("decoder_cost"));
    r.stderr_encoder_cost = read_number(se.at("encoder_cost"));
    r.stderr_power = read_number(se.at("power"));
    r.stderr_ortho = read_number(se.at("ortho"));
    for (const json& b : doc.at("batches")) {
      simulate::BatchMoments bm;
      bm.count = b.at("count").get<std::uint64_t>();
      bm.Sigma_u = read_matrix(b.at("Sigma_u"));
      bm.Sigma_e = read_matrix(b.at("Sigma_e"));
      bm.cross = read_matrix(b.at("cross"));
      bm.decoder_cost = read_number(b.at("decoder_cost"));
      bm.encoder_cost = read_number(b.at("encoder_cost"));
      bm.power = read_number(b.at("power"));
      r.batches.push_back(std::move(bm));
    }
    return r;
  });
}

}  // namespace signalgame::json_io
