#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "polar/circle_config.hpp"
#include "polar/error.hpp"
#include "polar/kernels.hpp"
#include "polar/transport.hpp"

namespace polar {

/// 17 significant digits; "inf" for +infinity.
inline std::string format_real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline double parse_real(std::string_view text) {
  std::string s(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw Error("parse-error", "not a number: '" + s + "'");
  }
  if (used != s.size()) throw Error("parse-error", "not a number: '" + s + "'");
  return v;
}

/// Kernel grammar: "riesz:<s>", "log", "power:<alpha>".
inline Kernel parse_kernel(std::string_view spec) {
  if (spec == "log") return log_kernel();
  const auto colon = spec.find(':');
  if (colon != std::string_view::npos) {
    const auto name = spec.substr(0, colon);
    const double p = parse_real(spec.substr(colon + 1));
    if (name == "riesz") return riesz_kernel(p);
    if (name == "power") return power_kernel(p);
  }
  throw Error("unknown-kernel", "unknown kernel '" + std::string(spec) + "'");
}

enum class AngleUnits { radians, turns };

inline std::vector<double> to_radians(std::vector<double> a, AngleUnits units) {
  if (units == AngleUnits::turns)
    for (double& v : a) v *= kTwoPi;
  return a;
}

inline nlohmann::json configuration_to_json(const Configuration& c) {
  return nlohmann::json(c.angles());
}

inline Configuration configuration_from_json(const nlohmann::json& j,
                                             AngleUnits units = AngleUnits::radians) {
  if (!j.is_array()) throw Error("parse-error", "configuration JSON must be an array of angles");
  std::vector<double> a;
  for (const auto& v : j) {
    if (!v.is_number()) throw Error("parse-error", "configuration entries must be numbers");
    a.push_back(v.get<double>());
  }
  return Configuration::from_unordered(to_radians(std::move(a), units));
}

/// One angle per line; blank lines and a non-numeric header line are skipped.
inline Configuration configuration_from_csv(std::istream& in,
                                            AngleUnits units = AngleUnits::radians) {
  std::vector<double> a;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    try {
      a.push_back(parse_real(line));
    } catch (const Error&) {
      if (!first) throw;
    }
    first = false;
  }
  return Configuration::from_unordered(to_radians(std::move(a), units));
}

/// Loads a configuration file; JSON if the content starts with '[', CSV
/// otherwise.
inline Configuration load_configuration(const std::string& path,
                                        AngleUnits units = AngleUnits::radians) {
  std::ifstream in(path);
  if (!in) throw Error("io-error", "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error("parse-error", e.what());
    }
    return configuration_from_json(j, units);
  }
  std::istringstream csv(text);
  return configuration_from_csv(csv, units);
}

inline nlohmann::json plan_to_json(const TransportPlan& plan) {
  return {{"deltas", plan.deltas},
          {"source_gaps", plan.source_gaps},
          {"target_gaps", plan.target_gaps},
          {"max_delta", plan.max_delta}};
}

inline TransportPlan plan_from_json(const nlohmann::json& j) {
  TransportPlan plan;
  try {
    plan.deltas = j.at("deltas").get<std::vector<double>>();
    plan.source_gaps = j.at("source_gaps").get<std::vector<double>>();
    plan.target_gaps = j.at("target_gaps").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error("parse-error", e.what());
  }
  plan.max_delta = 0.0;
  for (double d : plan.deltas) plan.max_delta = std::max(plan.max_delta, d);
  return plan;
}

}  // namespace polar
