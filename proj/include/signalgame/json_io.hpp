#pragma once

#include <string>
#include <string_view>

#include "signalgame/channel.hpp"
#include "signalgame/cheaptalk.hpp"
#include "signalgame/noisy.hpp"
#include "signalgame/simulate.hpp"

// Versioned JSON result documents ("schema": "signalgame/1"). Matrices are
// nested row arrays; doubles use the shortest round-trip representation, so
// every document parses back to bit-identical values. Non-finite numbers are
// written as null and read back as NaN.
namespace signalgame::json_io {

std::string to_json(const cheaptalk::EquilibriumSolution& sol);
std::string to_json(const noisy::PowerSolution& sol);
std::string to_json(const channel::WaterFillResult& wf);
std::string to_json(const simulate::SimReport& report);

/// Parsers throw ParseError on malformed input or a wrong schema/kind.
cheaptalk::EquilibriumSolution equilibrium_from_json(std::string_view text);
noisy::PowerSolution power_from_json(std::string_view text);
channel::WaterFillResult waterfill_from_json(std::string_view text);
simulate::SimReport sim_report_from_json(std::string_view text);

}  // namespace signalgame::json_io
