#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "signalgame/scenario.hpp"

namespace signalgame {

inline constexpr std::string_view kSchemaTag = "signalgame/1";

/// TOML scenario document:
///
///   version = "signalgame/1"
///   [source]
///   covariance = [[1.0, 0.0], [0.0, 1.5]]
///   [bias]
///   A = [[0.8, 0.0], [0.0, 0.2]]
///   b = [0.0, 0.0]          # optional, default 0
///   rho = 0.0               # optional, default 0
///   [channel]
///   covariance = [[0.5, 0.0], [0.0, 0.5]]   # optional, default O
///   [sim]
///   samples = 100000        # optional
///   seed = 7                # optional
///
/// Matrices are nested row arrays, flat row-major arrays of n*n numbers, or
/// a bare number when n = 1.
struct ScenarioFile {
  std::string version{kSchemaTag};
  Scenario scenario;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
};

/// Throws ParseError naming the line and field on malformed input; the
/// resulting scenario is validated before returning.
ScenarioFile parse_scenario_toml(std::string_view text, std::string_view source_name = "<input>");

ScenarioFile load_scenario_file(const std::string& path);

std::string scenario_to_toml(const ScenarioFile& file);

}  // namespace signalgame
