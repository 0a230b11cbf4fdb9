#pragma once

#include <optional>
#include <string>

namespace sl2w {

struct Config {
  enum class Output { Json, Text };

  int max_chords_oracle = 5;
  int max_vertices = 8;
  std::optional<std::string> cache_path;
  Output output = Output::Json;

  // Reads a JSON config file; unknown keys are rejected, budgets must be
  // positive.
  static Config load(const std::string& path);
};

}  // namespace sl2w
