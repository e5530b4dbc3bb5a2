#include "signalgame/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "signalgame/channel.hpp"
#include "signalgame/cheaptalk.hpp"
#include "signalgame/json_io.hpp"
#include "signalgame/noisy.hpp"
#include "signalgame/numfmt.hpp"
#include "signalgame/phase_diagram.hpp"
#include "signalgame/scenario_file.hpp"
#include "signalgame/simulate.hpp"

namespace signalgame::cli {

namespace {

constexpr std::uint64_t kDefaultSamples = 10000;

// Output sink failures are runtime problems, not input problems.
class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw OutputError("cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw OutputError("failed writing '" + path + "'");
}

std::uint64_t parse_seed_env() {
  const char* env = std::getenv("SIGNALGAME_SEED");
  if (env == nullptr || *env == '\0') return 0;
  std::uint64_t v = 0;
  const std::string_view s(env);
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw Error(ErrorKind::ParseError, "SIGNALGAME_SEED must be an unsigned integer");
  }
  return v;
}

std::vector<double> parse_eig_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto v = parse_double(item);
    if (!v || !std::isfinite(*v)) {
      throw Error(ErrorKind::ParseError, "--eigs: '" + item + "' is not a number");
    }
    values.push_back(*v);
  }
  if (values.empty()) throw Error(ErrorKind::ParseError, "--eigs: empty list");
  return values;
}

noisy::PowerSolution solve_power(const Scenario& scen) {
  if (scen.dim() == 1) {
    return noisy::scalar_power(scen.A(0, 0), scen.b(0), scen.sigma_m(0, 0),
                               scen.sigma_w(0, 0), scen.rho);
  }
  return noisy::optimize_bound_power(scen);
}

/// Equilibrium encoder for a scenario: the cheap-talk projection encoder when
/// messaging is free, otherwise alpha * I from the power solution.
Matrix equilibrium_encoder(const Scenario& scen) {
  if (scen.is_cheap_talk()) return cheaptalk::solve_noiseless(scen).L;
  if (scen.rho == 0.0) {
    throw Error(ErrorKind::NotSignaling,
                "a noisy channel with rho = 0 has no power-limited equilibrium");
  }
  const noisy::PowerSolution sol = solve_power(scen);
  return sol.alpha * Matrix::Identity(scen.dim(), scen.dim());
}

std::string scatter_csv(const simulate::SampleTrace& trace) {
  const Eigen::Index n = trace.m.rows();
  std::string out;
  for (Eigen::Index i = 0; i < n; ++i) out += (i == 0 ? "m" : ",m") + std::to_string(i + 1);
  for (Eigen::Index i = 0; i < n; ++i) out += ",u" + std::to_string(i + 1);
  out += '\n';
  for (Eigen::Index s = 0; s < trace.m.cols(); ++s) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i > 0) out += ',';
      out += format_double(trace.m(i, s));
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      out += ',';
      out += format_double(trace.u(i, s));
    }
    out += '\n';
  }
  return out;
}

struct Options {
  std::string file;
  std::string out;
  std::string scatter;
  std::string eigs;
  std::string a_range;
  std::string rho_range;
  double sigma_m2 = 1.0;
  double sigma_w2 = 1.0;
  double power = 0.0;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
};

int cmd_solve_cheaptalk(const Options& o, std::ostream& out) {
  const ScenarioFile file = load_scenario_file(o.file);
  emit(json_io::to_json(cheaptalk::solve_noiseless(file.scenario)), o.out, out);
  return kExitOk;
}

int cmd_solve_noisy(const Options& o, std::ostream& out) {
  const ScenarioFile file = load_scenario_file(o.file);
  emit(json_io::to_json(solve_power(file.scenario)), o.out, out);
  return kExitOk;
}

int cmd_phase_diagram(const Options& o, std::ostream& out) {
  const Axis a_axis = parse_axis(o.a_range);
  const Axis rho_axis = parse_axis(o.rho_range);
  emit(phase_diagram_csv(phase_diagram(a_axis, rho_axis, o.sigma_m2, o.sigma_w2)), o.out, out);
  return kExitOk;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const ScenarioFile file = load_scenario_file(o.file);
  simulate::SimConfig cfg;
  cfg.scenario = file.scenario;
  cfg.samples = o.samples.value_or(file.samples.value_or(kDefaultSamples));
  cfg.seed = o.seed ? *o.seed : (file.seed ? *file.seed : parse_seed_env());
  if (cfg.samples < 1) throw Error(ErrorKind::InvalidScenario, "--samples must be >= 1");
  cfg.encoder = equilibrium_encoder(cfg.scenario);

  simulate::SampleTrace trace;
  simulate::SimReport report;
  try {
    report = simulate::run_sim(cfg, o.scatter.empty() ? nullptr : &trace);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SimulationFailure) throw;
    throw Error(ErrorKind::SimulationFailure, e.what());
  } catch (const std::bad_alloc&) {
    throw Error(ErrorKind::SimulationFailure, "out of memory");
  }
  if (!o.scatter.empty()) emit(scatter_csv(trace), o.scatter, out);
  emit(json_io::to_json(report), o.out, out);
  return kExitOk;
}

int cmd_waterfill(const Options& o, std::ostream& out) {
  channel::WaterFillResult wf;
  if (!o.eigs.empty()) {
    const std::vector<double> eigs = parse_eig_list(o.eigs);
    wf = channel::waterfill_eigs(eigs, o.power);
  } else {
    const ScenarioFile file = load_scenario_file(o.file);
    wf = channel::waterfill(file.scenario.sigma_w, o.power);
  }
  emit(json_io::to_json(wf), o.out, out);
  return kExitOk;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidScenario:
    case ErrorKind::InvalidMatrix:
    case ErrorKind::NotPSD:
    case ErrorKind::NotPD:
    case ErrorKind::DimError:
    case ErrorKind::InvalidPower:
      return kExitInput;
    case ErrorKind::NotCheapTalk:
    case ErrorKind::NotSignaling:
    case ErrorKind::NotIsotropic:
    case ErrorKind::Infeasible:
    case ErrorKind::TooLarge:
      return kExitRegime;
    case ErrorKind::SimulationFailure:
      return kExitRuntime;
  }
  return kExitRuntime;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equilibria of Gaussian signaling games with sensitivity mismatch", "signalgame"};
  app.require_subcommand(1);
  Options o;

  auto* cheap = app.add_subcommand("solve-cheaptalk", "Noiseless equilibrium as JSON");
  cheap->add_option("file", o.file, "Scenario TOML")->required();
  cheap->add_option("--out,--json", o.out, "Output path (default stdout)");

  auto* noisy_cmd = app.add_subcommand("solve-noisy", "Optimal power for the noisy game as JSON");
  noisy_cmd->add_option("file", o.file, "Scenario TOML")->required();
  noisy_cmd->add_option("--out,--json", o.out, "Output path (default stdout)");

  auto* phase = app.add_subcommand("phase-diagram", "Scalar (a, rho) regime grid as CSV");
  phase->add_option("--a", o.a_range, "a axis as min:max:steps")->required();
  phase->add_option("--rho", o.rho_range, "rho axis as min:max:steps")->required();
  phase->add_option("--sigma-m2", o.sigma_m2, "Source variance")->capture_default_str();
  phase->add_option("--sigma-w2", o.sigma_w2, "Noise variance")->capture_default_str();
  phase->add_option("--out,--csv", o.out, "Output path (default stdout)");

  auto* sim = app.add_subcommand("simulate", "Monte Carlo run of the equilibrium encoder");
  sim->add_option("file", o.file, "Scenario TOML")->required();
  sim->add_option("--samples", o.samples, "Sample count");
  sim->add_option("--seed", o.seed, "RNG seed (default: file, then SIGNALGAME_SEED, then 0)");
  sim->add_option("--scatter", o.scatter, "Write per-sample m,u pairs to this CSV");
  sim->add_option("--out,--json", o.out, "Report path (default stdout)");

  auto* wf = app.add_subcommand("waterfill", "Water-filling allocation as JSON");
  auto* eigs_opt = wf->add_option("--eigs,--noise-eigs", o.eigs, "Comma-separated noise eigenvalues");
  auto* file_opt = wf->add_option("file", o.file, "Scenario TOML (uses channel.covariance)");
  eigs_opt->excludes(file_opt);
  wf->add_option("--power", o.power, "Total power budget")->required();
  wf->add_option("--out,--json", o.out, "Output path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*cheap) return cmd_solve_cheaptalk(o, out);
    if (*noisy_cmd) return cmd_solve_noisy(o, out);
    if (*phase) return cmd_phase_diagram(o, out);
    if (*sim) return cmd_simulate(o, out);
    if (*wf) {
      if (o.eigs.empty() && o.file.empty()) {
        err << "waterfill: give --eigs or a scenario file\n";
        return kExitInput;
      }
      return cmd_waterfill(o, out);
    }
  } catch (const Error& e) {
    err << "signalgame: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const OutputError& e) {
    err << "signalgame: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const std::exception& e) {
    err << "signalgame: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitInput;
}

}  // namespace signalgame::cli
