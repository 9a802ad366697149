#include "haway/config.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace haway {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double to_double(const std::string& key, const std::string& v) {
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (end == v.c_str())
    throw std::invalid_argument("config: bad number for " + key);
  return x;
}

long to_long(const std::string& key, const std::string& v) {
  return static_cast<long>(to_double(key, v));
}

std::vector<ProbePoint> parse_probes(const std::string& v) {
  std::vector<ProbePoint> out;
  std::istringstream is(v);
  std::string pair;
  while (std::getline(is, pair, ';')) {
    pair = trim(pair);
    if (pair.empty()) continue;
    const auto comma = pair.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("config: probes need x,y pairs");
    ProbePoint p;
    p.x = to_double("probes", pair.substr(0, comma));
    p.y = to_double("probes", pair.substr(comma + 1));
    out.push_back(p);
  }
  return out;
}

SourceTarget parse_target(const std::string& v) {
  if (v == "pressure" || v == "p") return SourceTarget::pressure;
  if (v == "xi") return SourceTarget::xi;
  if (v == "zeta") return SourceTarget::zeta;
  if (v == "xi_zeta") return SourceTarget::xi_zeta;
  if (v == "vm2") return SourceTarget::vm2;
  throw std::invalid_argument("config: unknown source.target " + v);
}

TimeProfile parse_time_profile(const std::string& v) {
  if (v == "constant") return TimeProfile::constant;
  if (v == "sin_pi_t" || v == "sin") return TimeProfile::sin_pi_t;
  if (v == "exp_decay" || v == "decay") return TimeProfile::exp_decay;
  throw std::invalid_argument("config: unknown source.time_profile " + v);
}

}  // namespace

SimulationConfig parse_config(std::istream& is) {
  SimulationConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                  " is not `key = value`");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));

    if (key == "grid.J")
      cfg.J = static_cast<int>(to_long(key, val));
    else if (key == "grid.L")
      cfg.L = to_double(key, val);
    else if (key == "pml.cells")
      cfg.pml_cells = static_cast<int>(to_long(key, val));
    else if (key == "pml.profile")
      cfg.pml_profile = val;
    else if (key == "pml.sigma_max")
      cfg.sigma_max = to_double(key, val);
    else if (key == "pml.exponent")
      cfg.ramp_exponent = static_cast<int>(to_long(key, val));
    else if (key == "flow.u0")
      cfg.flow.u0 = to_double(key, val);
    else if (key == "flow.v0")
      cfg.flow.v0 = to_double(key, val);
    else if (key == "flow.c0")
      cfg.flow.c0 = to_double(key, val);
    else if (key == "flow.rho0")
      cfg.flow.rho0 = to_double(key, val);
    else if (key == "scheme.cfl_fraction")
      cfg.cfl_fraction = to_double(key, val);
    else if (key == "scheme.steps")
      cfg.steps = to_long(key, val);
    else if (key == "source.kind") {
      cfg.has_source = true;
      if (val == "initial_condition" || val == "initial")
        cfg.source.kind = SourceKind::initial_condition;
      else if (val == "time_forcing" || val == "forcing")
        cfg.source.kind = SourceKind::time_forcing;
      else
        throw std::invalid_argument("config: unknown source.kind " + val);
    } else if (key == "source.target") {
      cfg.has_source = true;
      cfg.source.target = parse_target(val);
    } else if (key == "source.time_profile") {
      cfg.has_source = true;
      cfg.source.time_profile = parse_time_profile(val);
    } else if (key == "source.center") {
      cfg.has_source = true;
      const auto comma = val.find(',');
      if (comma == std::string::npos)
        throw std::invalid_argument("config: source.center needs x,y");
      cfg.source.x = to_double(key, val.substr(0, comma));
      cfg.source.y = to_double(key, val.substr(comma + 1));
    } else if (key == "source.width") {
      cfg.source.width = to_double(key, val);
    } else if (key == "source.amplitude") {
      cfg.has_source = true;
      cfg.source.amplitude = to_double(key, val);
    } else if (key == "source.decay_rate") {
      cfg.source.decay_rate = to_double(key, val);
    } else if (key == "source.hard_set") {
      cfg.hard_set_forcing = (val == "1" || val == "true" || val == "yes");
    } else if (key == "probes") {
      cfg.probes = parse_probes(val);
    } else if (key == "snapshot.every") {
      cfg.snapshot_every = to_long(key, val);
    } else {
      throw std::invalid_argument("config: unknown key " + key);
    }
  }
  return cfg;
}

SimulationConfig load_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("config: cannot open " + path);
  return parse_config(is);
}

}  // namespace haway
