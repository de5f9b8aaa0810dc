#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "omq/constants.hpp"
#include "omq/errors.hpp"

namespace omq {

enum class Protocol { squeeze, sidebands, steady, transfer, jumps, interference, pulsed };

inline const char* protocol_name(Protocol p) {
  switch (p) {
    case Protocol::squeeze: return "squeeze";
    case Protocol::sidebands: return "sidebands";
    case Protocol::steady: return "steady";
    case Protocol::transfer: return "transfer";
    case Protocol::jumps: return "jumps";
    case Protocol::interference: return "interference";
    case Protocol::pulsed: return "pulsed";
  }
  return "?";
}

inline Protocol protocol_from_name(const std::string& s) {
  for (Protocol p : {Protocol::squeeze, Protocol::sidebands, Protocol::steady,
                     Protocol::transfer, Protocol::jumps, Protocol::interference,
                     Protocol::pulsed}) {
    if (s == protocol_name(p)) return p;
  }
  throw ConfigError("unknown protocol: " + s);
}

/// One resolved run: protocol, optional preset, raw (unit-carrying) parameter
/// overrides, output controls. Serializes to a key = value text block that
/// re-parses to an equal value.
struct RunConfig {
  Protocol protocol = Protocol::squeeze;
  std::string preset;
  std::map<std::string, std::string> overrides;
  std::string out_dir = ".";
  std::uint64_t seed = 1;
  int grid_points = 2000;
  int trajectories = 8;
  std::string format = "csv";  // csv | svg | both

  bool operator==(const RunConfig&) const = default;
};

inline std::string serialize_config(const RunConfig& c) {
  std::string out;
  out += std::string("protocol = ") + protocol_name(c.protocol) + "\n";
  if (!c.preset.empty()) out += "preset = " + c.preset + "\n";
  out += "out = " + c.out_dir + "\n";
  out += "seed = " + std::to_string(c.seed) + "\n";
  out += "grid_points = " + std::to_string(c.grid_points) + "\n";
  out += "trajectories = " + std::to_string(c.trajectories) + "\n";
  out += "format = " + c.format + "\n";
  for (const auto& [k, v] : c.overrides) out += "set." + k + " = " + v + "\n";
  return out;
}

inline RunConfig parse_config_text(const std::string& text) {
  RunConfig c;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty() || line[0] == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("bad config line: " + line);
    auto trim = [](std::string s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
      return s;
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key == "protocol") c.protocol = protocol_from_name(val);
    else if (key == "preset") c.preset = val;
    else if (key == "out") c.out_dir = val;
    else if (key == "seed") c.seed = std::stoull(val);
    else if (key == "grid_points") c.grid_points = std::stoi(val);
    else if (key == "trajectories") c.trajectories = std::stoi(val);
    else if (key == "format") c.format = val;
    else if (key.rfind("set.", 0) == 0) c.overrides[key.substr(4)] = val;
    else throw ConfigError("unknown config key: " + key);
  }
  return c;
}

namespace units {

struct Quantity {
  double value;
  std::string unit;
};

inline Quantity split_unit(const std::string& s) {
  std::size_t i = 0;
  while (i < s.size() &&
         (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '+' || s[i] == '-' ||
          s[i] == '.' || s[i] == 'e' || s[i] == 'E')) {
    // 'e' only counts as part of the number when followed by digit or sign
    if ((s[i] == 'e' || s[i] == 'E') &&
        !(i + 1 < s.size() && (std::isdigit(static_cast<unsigned char>(s[i + 1])) ||
                               s[i + 1] == '+' || s[i + 1] == '-'))) {
      break;
    }
    ++i;
  }
  if (i == 0) throw ConfigError("expected a number in '" + s + "'");
  Quantity q;
  q.value = std::stod(s.substr(0, i));
  std::size_t j = i;
  while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
  q.unit = s.substr(j);
  return q;
}

/// Frequencies require an explicit unit: Hz-family values are ordinary
/// frequencies (converted by 2 pi); rad/s is stored as-is.
inline double frequency(const std::string& s) {
  const Quantity q = split_unit(s);
  if (q.unit == "rad/s") return q.value;
  if (q.unit == "Hz") return constants::two_pi * q.value;
  if (q.unit == "kHz") return constants::two_pi * 1e3 * q.value;
  if (q.unit == "MHz") return constants::two_pi * 1e6 * q.value;
  if (q.unit == "GHz") return constants::two_pi * 1e9 * q.value;
  throw ConfigError("frequency '" + s + "' needs a unit (Hz/kHz/MHz/GHz or rad/s)");
}

inline double mass(const std::string& s) {
  const Quantity q = split_unit(s);
  if (q.unit == "kg") return q.value;
  if (q.unit == "g") return 1e-3 * q.value;
  if (q.unit == "mg") return 1e-6 * q.value;
  if (q.unit == "ug") return 1e-9 * q.value;
  if (q.unit == "ng") return 1e-12 * q.value;
  if (q.unit == "pg") return 1e-15 * q.value;
  throw ConfigError("mass '" + s + "' needs a unit (kg/g/mg/ug/ng/pg)");
}

inline double length(const std::string& s) {
  const Quantity q = split_unit(s);
  if (q.unit == "m") return q.value;
  if (q.unit == "cm") return 1e-2 * q.value;
  if (q.unit == "mm") return 1e-3 * q.value;
  if (q.unit == "um") return 1e-6 * q.value;
  if (q.unit == "nm") return 1e-9 * q.value;
  throw ConfigError("length '" + s + "' needs a unit (m/cm/mm/um/nm)");
}

inline double power(const std::string& s) {
  const Quantity q = split_unit(s);
  if (q.unit == "W") return q.value;
  if (q.unit == "mW") return 1e-3 * q.value;
  if (q.unit == "uW") return 1e-6 * q.value;
  throw ConfigError("power '" + s + "' needs a unit (W/mW/uW)");
}

inline double temperature(const std::string& s) {
  const Quantity q = split_unit(s);
  if (q.unit == "K") return q.value;
  if (q.unit == "mK") return 1e-3 * q.value;
  if (q.unit == "uK") return 1e-6 * q.value;
  throw ConfigError("temperature '" + s + "' needs a unit (K/mK/uK)");
}

inline double duration(const std::string& s) {
  const Quantity q = split_unit(s);
  if (q.unit == "s") return q.value;
  if (q.unit == "ms") return 1e-3 * q.value;
  if (q.unit == "us") return 1e-6 * q.value;
  if (q.unit == "ns") return 1e-9 * q.value;
  throw ConfigError("time '" + s + "' needs a unit (s/ms/us/ns)");
}

inline double plain(const std::string& s) {
  const Quantity q = split_unit(s);
  if (!q.unit.empty()) throw ConfigError("'" + s + "' should be dimensionless");
  return q.value;
}

}  // namespace units

}  // namespace omq
