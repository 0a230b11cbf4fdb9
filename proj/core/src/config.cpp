#include <sl2w/config.hpp>

#include <sl2w/rational.hpp>

#include <nlohmann/json.hpp>

#include <fstream>

namespace sl2w {

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InputError("bad config JSON: " + std::string(e.what()));
  }
  Config cfg;
  for (const auto& [key, value] : j.items()) {
    if (key == "max_chords_oracle") {
      cfg.max_chords_oracle = value.get<int>();
    } else if (key == "max_vertices") {
      cfg.max_vertices = value.get<int>();
    } else if (key == "cache_path") {
      if (!value.is_null()) cfg.cache_path = value.get<std::string>();
    } else if (key == "output") {
      std::string s = value.get<std::string>();
      if (s == "json")
        cfg.output = Output::Json;
      else if (s == "text")
        cfg.output = Output::Text;
      else
        throw InputError("config output must be 'json' or 'text'");
    } else {
      throw InputError("unknown config key '" + key + "'");
    }
  }
  if (cfg.max_chords_oracle <= 0 || cfg.max_vertices <= 0)
    throw InputError("config budgets must be positive");
  return cfg;
}

}  // namespace sl2w
