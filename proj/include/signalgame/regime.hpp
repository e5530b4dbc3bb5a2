#pragma once

#include <optional>
#include <string_view>

namespace signalgame {

enum class Regime {
  NonInformative,
  PartiallyRevealing,
  FullyRevealing,
  Indifferent,
  Informative,
};

inline std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::NonInformative: return "non-informative";
    case Regime::PartiallyRevealing: return "partially-revealing";
    case Regime::FullyRevealing: return "fully-revealing";
    case Regime::Indifferent: return "indifferent";
    case Regime::Informative: return "informative";
  }
  return "unknown";
}

inline std::optional<Regime> parse_regime(std::string_view s) {
  for (Regime r : {Regime::NonInformative, Regime::PartiallyRevealing,
                   Regime::FullyRevealing, Regime::Indifferent, Regime::Informative}) {
    if (to_string(r) == s) return r;
  }
  return std::nullopt;
}

}  // namespace signalgame
