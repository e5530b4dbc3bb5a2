#include "signalgame/scenario_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#define TOML_EXCEPTIONS 1
#include "toml.hpp"

#include "signalgame/numfmt.hpp"

namespace signalgame {

namespace {

class FieldError {
 public:
  explicit FieldError(std::string_view source) : source_(source) {}

  [[noreturn]] void fail(const toml::node* node, std::string_view field,
                         const std::string& msg) const {
    std::ostringstream os;
    os << source_;
    if (node != nullptr && node->source().begin.line > 0) {
      os << ":" << node->source().begin.line;
    }
    os << ": field '" << field << "': " << msg;
    throw Error(ErrorKind::ParseError, os.str());
  }

 private:
  std::string source_;
};

std::optional<double> as_number(const toml::node& node) {
  if (node.is_floating_point()) return node.as_floating_point()->get();
  if (node.is_integer()) return static_cast<double>(node.as_integer()->get());
  return std::nullopt;
}

std::vector<double> read_numbers(const toml::array& arr, const FieldError& err,
                                 std::string_view field) {
  std::vector<double> out;
  out.reserve(arr.size());
  for (const toml::node& item : arr) {
    const auto v = as_number(item);
    if (!v) err.fail(&item, field, "expected a number");
    out.push_back(*v);
  }
  return out;
}

Matrix read_matrix(const toml::node& node, const FieldError& err, std::string_view field) {
  if (const auto v = as_number(node)) {
    return Matrix::Constant(1, 1, *v);
  }
  const toml::array* arr = node.as_array();
  if (arr == nullptr || arr->empty()) {
    err.fail(&node, field, "expected a number or a non-empty array");
  }
  if (arr->front().is_array()) {
    const auto rows = static_cast<Eigen::Index>(arr->size());
    Matrix m(rows, rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
      const toml::node& row_node = (*arr)[static_cast<std::size_t>(i)];
      const toml::array* row = row_node.as_array();
      if (row == nullptr) err.fail(&row_node, field, "every row must be an array");
      const std::vector<double> values = read_numbers(*row, err, field);
      if (static_cast<Eigen::Index>(values.size()) != rows) {
        err.fail(&row_node, field,
                 "row " + std::to_string(i + 1) + " has " + std::to_string(values.size()) +
                     " entries, expected " + std::to_string(rows) + " (square matrix)");
      }
      for (Eigen::Index j = 0; j < rows; ++j) m(i, j) = values[static_cast<std::size_t>(j)];
    }
    return m;
  }
  const std::vector<double> flat = read_numbers(*arr, err, field);
  const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(flat.size()))));
  if (n * n != static_cast<Eigen::Index>(flat.size())) {
    err.fail(&node, field,
             "flat matrix has " + std::to_string(flat.size()) + " entries, not a perfect square");
  }
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = flat[static_cast<std::size_t>(i * n + j)];
  }
  return m;
}

const toml::node* lookup(const toml::table& root, std::string_view section, std::string_view key) {
  const toml::node* sec = root.get(section);
  if (sec == nullptr || !sec->is_table()) return nullptr;
  return sec->as_table()->get(key);
}

std::optional<std::uint64_t> read_count(const toml::table& root, std::string_view key,
                                        const FieldError& err, bool allow_zero) {
  const toml::node* node = lookup(root, "sim", key);
  if (node == nullptr) return std::nullopt;
  const std::string field = "sim." + std::string(key);
  if (!node->is_integer()) err.fail(node, field, "expected an integer");
  const std::int64_t v = node->as_integer()->get();
  if (v < 0 || (!allow_zero && v == 0)) {
    err.fail(node, field, allow_zero ? "must be >= 0" : "must be >= 1");
  }
  return static_cast<std::uint64_t>(v);
}

std::string matrix_toml(const Matrix& m) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out += i == 0 ? "[" : ", [";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ", ";
      out += format_double(m(i, j));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace

ScenarioFile parse_scenario_toml(std::string_view text, std::string_view source_name) {
  const FieldError err(source_name);
  toml::table root;
  try {
    root = toml::parse(text, source_name);
  } catch (const toml::parse_error& e) {
    std::ostringstream os;
    os << source_name << ":" << e.source().begin.line << ": " << e.description();
    throw Error(ErrorKind::ParseError, os.str());
  }

  ScenarioFile file;
  const toml::node* version = root.get("version");
  if (version == nullptr) err.fail(nullptr, "version", "missing (expected \"signalgame/1\")");
  if (!version->is_string() || version->as_string()->get() != kSchemaTag) {
    err.fail(version, "version", "unsupported version, expected \"signalgame/1\"");
  }
  file.version = std::string(kSchemaTag);

  const toml::node* cov = lookup(root, "source", "covariance");
  if (cov == nullptr) err.fail(root.get("source"), "source.covariance", "missing");
  const Matrix sigma_m = read_matrix(*cov, err, "source.covariance");
  const Eigen::Index n = sigma_m.rows();

  const toml::node* a_node = lookup(root, "bias", "A");
  if (a_node == nullptr) err.fail(root.get("bias"), "bias.A", "missing");
  const Matrix A = read_matrix(*a_node, err, "bias.A");
  if (A.rows() != n) {
    err.fail(a_node, "bias.A", "expected " + std::to_string(n) + "x" + std::to_string(n));
  }

  Vector b = Vector::Zero(n);
  if (const toml::node* b_node = lookup(root, "bias", "b")) {
    std::vector<double> values;
    if (const auto v = as_number(*b_node)) {
      values.push_back(*v);
    } else if (const toml::array* arr = b_node->as_array()) {
      values = read_numbers(*arr, err, "bias.b");
    } else {
      err.fail(b_node, "bias.b", "expected an array of numbers");
    }
    if (static_cast<Eigen::Index>(values.size()) != n) {
      err.fail(b_node, "bias.b", "expected " + std::to_string(n) + " entries");
    }
    b = Eigen::Map<const Vector>(values.data(), n);
  }

  double rho = 0.0;
  if (const toml::node* rho_node = lookup(root, "bias", "rho")) {
    const auto v = as_number(*rho_node);
    if (!v) err.fail(rho_node, "bias.rho", "expected a number");
    if (!(*v >= 0.0) || !std::isfinite(*v)) err.fail(rho_node, "bias.rho", "must be finite and >= 0");
    rho = *v;
  }

  Matrix sigma_w = Matrix::Zero(n, n);
  if (const toml::node* w_node = lookup(root, "channel", "covariance")) {
    sigma_w = read_matrix(*w_node, err, "channel.covariance");
    if (sigma_w.rows() != n) {
      err.fail(w_node, "channel.covariance",
               "expected " + std::to_string(n) + "x" + std::to_string(n));
    }
  }

  file.samples = read_count(root, "samples", err, false);
  file.seed = read_count(root, "seed", err, true);

  file.scenario = Scenario{SymMatrix(sigma_m), A, b, SymMatrix(sigma_w), rho};
  file.scenario.validate();
  return file;
}

ScenarioFile load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open scenario file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_toml(buf.str(), path);
}

std::string scenario_to_toml(const ScenarioFile& file) {
  const Scenario& s = file.scenario;
  std::ostringstream os;
  os << "version = \"" << kSchemaTag << "\"\n\n";
  os << "[source]\ncovariance = " << matrix_toml(s.sigma_m.mat()) << "\n\n";
  os << "[bias]\nA = " << matrix_toml(s.A) << "\nb = [";
  for (Eigen::Index i = 0; i < s.b.size(); ++i) {
    if (i > 0) os << ", ";
    os << format_double(s.b(i));
  }
  os << "]\nrho = " << format_double(s.rho) << "\n\n";
  os << "[channel]\ncovariance = " << matrix_toml(s.sigma_w.mat()) << "\n";
  if (file.samples || file.seed) {
    os << "\n[sim]\n";
    if (file.samples) os << "samples = " << *file.samples << "\n";
    if (file.seed) os << "seed = " << *file.seed << "\n";
  }
  return os.str();
}

}  // namespace signalgame
