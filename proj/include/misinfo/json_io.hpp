#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "misinfo/game.hpp"
#include "misinfo/misinfo_game.hpp"
#include "misinfo/profile.hpp"

namespace misinfo {

using Json = nlohmann::json;

// Integers when they fit in 64 bits, "p/q" strings otherwise.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& path);

Json game_to_json(const NormalFormGame& g);
NormalFormGame game_from_json(const Json& j, const std::string& path = "$");

Json misinfo_to_json(const MisinformationGame& mg);
MisinformationGame misinfo_from_json(const Json& j, const std::string& path = "$");

// Exact probabilities as strings ("1/2"), numeric ones as numbers.
Json profile_to_json(const StrategyProfile& p);
Json position_to_json(const Position& p, int base = 0);

NormalFormGame parse_game_json(std::string_view text);
MisinformationGame parse_misinfo_json(std::string_view text);
std::string emit_game_json(const NormalFormGame& g);
std::string emit_misinfo_json(const MisinformationGame& mg);

}  // namespace misinfo
