#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "lipdist/distance.hpp"

namespace lipdist {

struct RunConfig {
  int n = 1;
  int jgrid = 14;
  double s = 1.0;
  int wavelet_p = 8;
  double theta = 0.1;
  std::optional<LevelRange> j_range;  // default: [jgrid / 2, jgrid - 2]
  int directions = 8;
  int probes_per_axis = 8;
  int scale_refinement = 1;
  std::string out = "out";
  std::uint64_t seed = 0;
  double band = 32.0;
  double eta = 0.99;

  LevelRange resolved_range() const;
  MethodSettings method_settings() const;

  /// Throws ValidationError when a field is outside its module's range.
  void validate() const;
};

/// Applies "key = value" lines (blank lines and '#' comments ignored).
/// Keys are the long flag names: n, jgrid, s, wavelet-p, theta, jmin, jmax,
/// directions, probes, refine, out, seed, band, eta.
void apply_config_text(RunConfig& config, std::string_view text);
void apply_config_value(RunConfig& config, std::string_view key, std::string_view value);
RunConfig load_config_file(const std::filesystem::path& path);

nlohmann::json to_json(const RunConfig& config);

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

/// Wraps a command's body with the configuration, a content hash over the
/// configuration and inputs, and a generation timestamp (the only field that
/// varies between identical runs).
nlohmann::json make_report(std::string_view command, const RunConfig& config,
                           const nlohmann::json& inputs, nlohmann::json body);

/// Writes to a temporary sibling and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string dump_json(const nlohmann::json& j);

}  // namespace lipdist
