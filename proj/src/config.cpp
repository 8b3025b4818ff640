// SPDX-License-Identifier: Apache-2.0
//
// covert-irs: covert-rate optimization for IRS-aided wireless links
// Copyright (C) 2026 The covert-irs authors
// ------------------------------------------------------------------------

#include "covert_irs/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "covert_irs/types.hpp"

namespace covert_irs {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text) {
  double out = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("key '" + std::string(key) + "': '" + std::string(text) + "' is not a number");
  }
  return out;
}

long long parse_integer(std::string_view key, std::string_view text) {
  long long out = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("key '" + std::string(key) + "': '" + std::string(text) + "' is not an integer");
  }
  return out;
}

using Setter = std::function<void(Scenario&, std::string_view key, std::string_view value)>;

Setter real(double SystemConfig::*field) {
  return [field](Scenario& s, std::string_view k, std::string_view v) { s.system.*field = parse_double(k, v); };
}
Setter real(double Geometry::*field) {
  return [field](Scenario& s, std::string_view k, std::string_view v) { s.geometry.*field = parse_double(k, v); };
}
Setter real(double CsiErrorBounds::*field) {
  return [field](Scenario& s, std::string_view k, std::string_view v) { s.bounds.*field = parse_double(k, v); };
}
Setter integer(int SystemConfig::*field) {
  return [field](Scenario& s, std::string_view k, std::string_view v) {
    s.system.*field = static_cast<int>(parse_integer(k, v));
  };
}

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"M", integer(&SystemConfig::M)},
      {"N", integer(&SystemConfig::N)},
      {"P_max", real(&SystemConfig::P_max)},
      {"P_max_dbm", [](Scenario& s, auto k, auto v) { s.system.P_max = dbm_to_watts(parse_double(k, v)); }},
      {"noise_w", real(&SystemConfig::noise_w)},
      {"noise_w_dbm", [](Scenario& s, auto k, auto v) { s.system.noise_w = dbm_to_watts(parse_double(k, v)); }},
      {"noise_b", real(&SystemConfig::noise_b)},
      {"noise_b_dbm", [](Scenario& s, auto k, auto v) { s.system.noise_b = dbm_to_watts(parse_double(k, v)); }},
      {"rho", real(&SystemConfig::rho)},
      {"rho_db", [](Scenario& s, auto k, auto v) { s.system.rho = db_to_linear(parse_double(k, v)); }},
      {"kappa", real(&SystemConfig::kappa)},
      {"gamma_tol", real(&SystemConfig::gamma_tol)},
      {"L", integer(&SystemConfig::L)},
      {"max_iters", integer(&SystemConfig::max_iters)},
      {"seed",
       [](Scenario& s, auto k, auto v) {
         const long long x = parse_integer(k, v);
         if (x < 0) throw ConfigError("seed must be non-negative");
         s.system.seed = static_cast<std::uint64_t>(x);
       }},
      {"z_mean",
       [](Scenario& s, auto, std::string_view v) {
         if (v == "direct") {
           s.system.z_mean = ZMeanConvention::kDirectPlusCascade;
         } else if (v == "irs") {
           s.system.z_mean = ZMeanConvention::kIrsPlusCascade;
         } else {
           throw ConfigError("z_mean must be 'direct' or 'irs'");
         }
       }},
      {"d_as_h", real(&Geometry::d_as_h)},
      {"d_aw_h", real(&Geometry::d_aw_h)},
      {"h_w", real(&Geometry::h_w)},
      {"d_ab_h", real(&Geometry::d_ab_h)},
      {"h_b", real(&Geometry::h_b)},
      {"bob_side",
       [](Scenario& s, auto, std::string_view v) {
         if (v == "right") {
           s.geometry.bob_side = BobSide::kRight;
         } else if (v == "left") {
           s.geometry.bob_side = BobSide::kLeft;
         } else {
           throw ConfigError("bob_side must be 'left' or 'right'");
         }
       }},
      {"mu_as", real(&Geometry::mu_as)},
      {"mu_ab", real(&Geometry::mu_ab)},
      {"mu_aw", real(&Geometry::mu_aw)},
      {"mu_sb", real(&Geometry::mu_sb)},
      {"mu_sw", real(&Geometry::mu_sw)},
      {"PL0", real(&Geometry::pl0_db)},
      {"pl0_db", real(&Geometry::pl0_db)},
      {"d0", real(&Geometry::d0)},
      {"zeta_aw", real(&CsiErrorBounds::zeta_aw)},
      {"zeta_sw", real(&CsiErrorBounds::zeta_sw)},
      {"zeta_as", real(&CsiErrorBounds::zeta_as)},
  };
  return table;
}

void require(bool ok, const char* what) {
  if (!ok) throw ConfigError(what);
}

}  // namespace

void SystemConfig::validate() const {
  require(M >= 1, "M must be >= 1");
  require(N >= 0, "N must be >= 0");
  require(P_max > 0.0 && std::isfinite(P_max), "P_max must be positive");
  require(noise_w > 0.0 && noise_b > 0.0, "noise powers must be positive");
  require(rho >= 1.0 && std::isfinite(rho), "rho must be >= 1");
  require(kappa > 0.0 && kappa < 1.0, "kappa must lie in (0,1)");
  require(gamma_tol > 0.0, "gamma_tol must be positive");
  require(L >= 1, "L must be >= 1");
  require(max_iters >= 1, "max_iters must be >= 1");
}

void Geometry::validate() const {
  require(d_as_h > 0.0 && d_aw_h > 0.0 && d_ab_h > 0.0, "horizontal distances must be positive");
  require(h_w >= 0.0 && h_b >= 0.0, "vertical offsets must be non-negative");
  require(mu_as > 0.0 && mu_ab > 0.0 && mu_aw > 0.0 && mu_sb > 0.0 && mu_sw > 0.0,
          "path-loss exponents must be positive");
  require(d0 > 0.0, "d0 must be positive");
  require(std::isfinite(pl0_db), "PL0 must be finite");
}

void CsiErrorBounds::validate() const {
  require(zeta_aw >= 0.0 && zeta_sw >= 0.0 && zeta_as >= 0.0, "CSI error bounds must be non-negative");
}

void validate(const Scenario& s) {
  s.system.validate();
  s.geometry.validate();
  s.bounds.validate();
}

void apply_setting(Scenario& s, std::string_view key, std::string_view value) {
  const auto& table = setters();
  const auto it = table.find(key);
  if (it == table.end()) throw ConfigError("unknown config key '" + std::string(key) + "'");
  it->second(s, key, value);
}

Scenario parse_scenario(std::istream& in, Scenario base) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    }
    const auto key = trim(view.substr(0, eq));
    const auto value = trim(view.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("line " + std::to_string(lineno) + ": empty key or value");
    }
    try {
      apply_setting(base, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  validate(base);
  return base;
}

Scenario parse_scenario_file(const std::string& path, Scenario base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_scenario(in, std::move(base));
}

}  // namespace covert_irs
