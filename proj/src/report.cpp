#include "lipdist/report.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <stdexcept>
#include <sstream>

#include <openssl/evp.h>

#include "lipdist/error.hpp"

namespace lipdist {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(std::string_view key, std::string_view text) {
  T v{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc{} || ptr != end)
    throw ValidationError("invalid value '" + std::string(text) + "' for " + std::string(key));
  return v;
}

}  // namespace

LevelRange RunConfig::resolved_range() const {
  if (j_range) return *j_range;
  return {jgrid / 2, jgrid - 2};
}

MethodSettings RunConfig::method_settings() const {
  MethodSettings m;
  m.probes.directions = directions;
  m.probes.probes_per_axis = probes_per_axis;
  m.probes.scale_refinement = scale_refinement;
  m.vanishing_moments = wavelet_p;
  return m;
}

void RunConfig::validate() const {
  if (n != 1 && n != 2) throw ValidationError("n must be 1 or 2");
  const int top = n == 1 ? 20 : 11;
  if (jgrid < 4 || jgrid > top)
    throw ValidationError("jgrid must lie in [4, " + std::to_string(top) + "] for n = " + std::to_string(n));
  if (!(s > 0.0 && s <= 1.0)) throw ValidationError("s must lie in (0, 1]");
  if (wavelet_p < 2 || wavelet_p > 10) throw ValidationError("wavelet-p must lie in [2, 10]");
  if (!(theta >= 0.0) || !std::isfinite(theta)) throw ValidationError("theta must be a finite value >= 0");
  const LevelRange r = resolved_range();
  if (r.lo < 0 || r.lo > r.hi || r.hi > jgrid - 2)
    throw ValidationError("level range [" + std::to_string(r.lo) + ", " + std::to_string(r.hi) +
                          "] must satisfy 0 <= jmin <= jmax <= jgrid - 2");
  if (directions < 1) throw ValidationError("directions must be >= 1");
  if (probes_per_axis < 1) throw ValidationError("probes must be >= 1");
  if (scale_refinement < 1) throw ValidationError("refine must be >= 1");
  if (!(band >= 1.0)) throw ValidationError("band must be >= 1");
  if (!(eta > 0.0 && eta <= 1.0)) throw ValidationError("eta must lie in (0, 1]");
}

void apply_config_value(RunConfig& c, std::string_view key, std::string_view value) {
  if (key == "n") {
    c.n = parse_number<int>(key, value);
  } else if (key == "jgrid") {
    c.jgrid = parse_number<int>(key, value);
  } else if (key == "s") {
    c.s = parse_number<double>(key, value);
  } else if (key == "wavelet-p") {
    c.wavelet_p = parse_number<int>(key, value);
  } else if (key == "theta") {
    c.theta = parse_number<double>(key, value);
  } else if (key == "jmin" || key == "jmax") {
    LevelRange r = c.resolved_range();
    (key == "jmin" ? r.lo : r.hi) = parse_number<int>(key, value);
    c.j_range = r;
  } else if (key == "directions") {
    c.directions = parse_number<int>(key, value);
  } else if (key == "probes") {
    c.probes_per_axis = parse_number<int>(key, value);
  } else if (key == "refine") {
    c.scale_refinement = parse_number<int>(key, value);
  } else if (key == "out") {
    c.out = std::string(value);
  } else if (key == "seed") {
    c.seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "band") {
    c.band = parse_number<double>(key, value);
  } else if (key == "eta") {
    c.eta = parse_number<double>(key, value);
  } else {
    throw ValidationError("unknown configuration key '" + std::string(key) + "'");
  }
}

void apply_config_text(RunConfig& config, std::string_view text) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ValidationError("config line " + std::to_string(line_no) + ": expected key = value");
    apply_config_value(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

RunConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  RunConfig config;
  apply_config_text(config, buf.str());
  return config;
}

nlohmann::json to_json(const RunConfig& c) {
  const LevelRange r = c.resolved_range();
  return {{"n", c.n},
          {"J_grid", c.jgrid},
          {"s", c.s},
          {"wavelet_p", c.wavelet_p},
          {"theta", c.theta},
          {"J_range", {r.lo, r.hi}},
          {"directions", c.directions},
          {"probes_per_axis", c.probes_per_axis},
          {"scale_refinement", c.scale_refinement},
          {"out", c.out},
          {"seed", c.seed},
          {"band", c.band},
          {"eta", c.eta}};
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

nlohmann::json make_report(std::string_view command, const RunConfig& config,
                           const nlohmann::json& inputs, nlohmann::json body) {
  const nlohmann::json config_json = to_json(config);
  const std::string hashed = nlohmann::json{{"command", command}, {"config", config_json}, {"inputs", inputs}}.dump();
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return {{"command", command},
          {"config", config_json},
          {"inputs", inputs},
          {"input_hash", sha256_hex(hashed)},
          {"generated_at", stamp},
          {"result", std::move(body)}};
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace lipdist
