#include "misinfo/json_io.hpp"

#include <limits>

#include "misinfo/error.hpp"

namespace misinfo {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::Schema, path + ": " + what);
}

const Json& field(const Json& j, const char* name, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) schema_error(path, std::string("missing field \"") + name + "\"");
  return *it;
}

std::size_t positive_integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 1) schema_error(path, "expected a positive integer");
  return j.get<std::size_t>();
}

}  // namespace

Json rational_to_json(const Rational& r) {
  if (r.is_integer() && r.raw().get_num().fits_slong_p()) return r.raw().get_num().get_si();
  return r.str();
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned() && j.get<unsigned long long>() > static_cast<unsigned long long>(std::numeric_limits<long>::max()))
      return Rational::parse(std::to_string(j.get<unsigned long long>()));
    return Rational(static_cast<long>(j.get<long long>()));
  }
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
      throw Error(ErrorKind::Parse, path + ": " + e.what());
    }
  }
  schema_error(path, "expected an integer or a \"p/q\" string");
}

Json game_to_json(const NormalFormGame& g) {
  const std::size_t n = g.num_players();
  // Builds the nested array for the strategies of players depth..n-1.
  auto build = [&](auto&& self, std::size_t depth, std::size_t base) -> Json {
    Json arr = Json::array();
    if (depth == n) {
      for (const auto& r : g.cell(base)) arr.push_back(rational_to_json(r));
      return arr;
    }
    for (std::size_t s = 0; s < g.strategy_count(depth); ++s)
      arr.push_back(self(self, depth + 1, base + s * g.stride(depth)));
    return arr;
  };
  Json j;
  j["players"] = n;
  j["strategies"] = g.strategy_counts();
  j["payoffs"] = build(build, 0, 0);
  return j;
}

NormalFormGame game_from_json(const Json& j, const std::string& path) {
  const std::size_t n = positive_integer(field(j, "players", path), path + ".players");
  const Json& strategies = field(j, "strategies", path);
  if (!strategies.is_array() || strategies.size() != n)
    schema_error(path + ".strategies", "expected an array of " + std::to_string(n) + " strategy counts");
  std::vector<std::size_t> counts;
  for (std::size_t i = 0; i < n; ++i)
    counts.push_back(positive_integer(strategies[i], path + ".strategies[" + std::to_string(i) + "]"));
  NormalFormGame shape = NormalFormGame::filled(counts, Rational());
  std::vector<Rational> flat(shape.num_cells() * n);

  auto walk = [&](auto&& self, const Json& node, std::size_t depth, std::size_t base, const std::string& at) -> void {
    if (depth == n) {
      if (!node.is_array() || node.size() != n)
        schema_error(at, "expected a payoff vector of " + std::to_string(n) + " entries");
      for (std::size_t i = 0; i < n; ++i)
        flat[base * n + i] = rational_from_json(node[i], at + "[" + std::to_string(i) + "]");
      return;
    }
    if (!node.is_array() || node.size() != counts[depth])
      schema_error(at, "expected an array of " + std::to_string(counts[depth]) + " entries for player " +
                           std::to_string(depth + 1));
    for (std::size_t s = 0; s < counts[depth]; ++s)
      self(self, node[s], depth + 1, base + s * shape.stride(depth), at + "[" + std::to_string(s) + "]");
  };
  walk(walk, field(j, "payoffs", path), 0, 0, path + ".payoffs");
  return NormalFormGame(std::move(counts), std::move(flat));
}

Json misinfo_to_json(const MisinformationGame& mg) {
  Json j;
  j["actual"] = game_to_json(mg.actual);
  j["subjective"] = Json::array();
  for (const auto& g : mg.subjective) j["subjective"].push_back(game_to_json(g));
  return j;
}

MisinformationGame misinfo_from_json(const Json& j, const std::string& path) {
  MisinformationGame mg{game_from_json(field(j, "actual", path), path + ".actual"), {}};
  const Json& subjective = field(j, "subjective", path);
  if (!subjective.is_array()) schema_error(path + ".subjective", "expected an array of games");
  for (std::size_t i = 0; i < subjective.size(); ++i)
    mg.subjective.push_back(game_from_json(subjective[i], path + ".subjective[" + std::to_string(i) + "]"));
  return mg;
}

Json profile_to_json(const StrategyProfile& p) {
  Json out = Json::array();
  for (const auto& s : p.strategies()) {
    Json probs = Json::array();
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s.is_exact())
        probs.push_back(s.exact()[j].str());
      else
        probs.push_back(s.values()[j]);
    }
    out.push_back(std::move(probs));
  }
  return out;
}

Json position_to_json(const Position& p, int base) {
  Json out = Json::array();
  for (auto i : p.indices) out.push_back(i + static_cast<std::size_t>(base));
  return out;
}

namespace {

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

NormalFormGame parse_game_json(std::string_view text) { return game_from_json(parse_text(text)); }
MisinformationGame parse_misinfo_json(std::string_view text) { return misinfo_from_json(parse_text(text)); }
std::string emit_game_json(const NormalFormGame& g) { return game_to_json(g).dump(2) + "\n"; }
std::string emit_misinfo_json(const MisinformationGame& mg) { return misinfo_to_json(mg).dump(2) + "\n"; }

}  // namespace misinfo
