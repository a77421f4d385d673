#include "cauchy/io.hpp"

#include <filesystem>
#include <fstream>

#include "cauchy/error.hpp"

namespace cauchy::io {

json complex_array(std::span<const cplx> values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back({v.real(), v.imag()});
  return arr;
}

std::vector<cplx> parse_complex_array(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ConfigError, "expected an array of [re, im] pairs");
  std::vector<cplx> out;
  out.reserve(j.size());
  for (const auto& pair : j) {
    if (pair.is_number()) {
      out.emplace_back(pair.get<double>(), 0.0);
    } else if (pair.is_array() && pair.size() == 2 && pair[0].is_number() && pair[1].is_number()) {
      out.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    } else {
      throw Error(ErrorKind::ConfigError, "malformed complex entry: " + pair.dump());
    }
  }
  return out;
}

json to_json(const PowerSeries& s) { return complex_array(s.coeffs()); }

PowerSeries series_from_json(const json& j) {
  auto c = parse_complex_array(j);
  if (c.empty()) throw Error(ErrorKind::ConfigError, "empty series");
  return PowerSeries(std::move(c));
}

json to_json(const BoundaryFunction& f) {
  return {{"N", f.N()}, {"samples", complex_array(f.samples)}, {"circle_radius", f.circle_radius}};
}

BoundaryFunction boundary_function_from_json(const json& j) {
  if (!j.is_object() || !j.contains("samples")) {
    throw Error(ErrorKind::ConfigError, "boundary function needs a samples array");
  }
  for (const auto& [key, _] : j.items()) {
    if (key != "N" && key != "samples" && key != "circle_radius")
      throw Error(ErrorKind::ConfigError, "unknown key in boundary function: " + key);
  }
  BoundaryFunction f;
  f.samples = parse_complex_array(j.at("samples"));
  if (j.contains("N") && j.at("N").get<std::size_t>() != f.samples.size()) {
    throw Error(ErrorKind::SizeError, "N does not match the number of samples");
  }
  f.circle_radius = j.value("circle_radius", 1.0);
  return f;
}

json domain_spec(const AnalyticDomain& dom) {
  return {{"name", dom.name()}, {"psi", to_json(dom.psi())}, {"R", dom.R()}};
}

AnalyticDomain domain_from_json(const json& j) {
  if (!j.is_object() || !j.contains("psi")) throw Error(ErrorKind::ConfigError, "domain spec needs psi");
  for (const auto& [key, _] : j.items()) {
    if (key != "name" && key != "psi" && key != "R")
      throw Error(ErrorKind::ConfigError, "unknown key in domain spec: " + key);
  }
  std::optional<double> R;
  if (j.contains("R") && !j.at("R").is_null()) R = j.at("R").get<double>();
  return AnalyticDomain::from_map(j.value("name", std::string("custom")), series_from_json(j.at("psi")), R);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ConfigError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ConfigError, path + ": " + e.what());
  }
}

AnalyticDomain load_domain(const std::string& name_or_path) {
  if (std::filesystem::exists(name_or_path)) {
    try {
      return domain_from_json(read_json_file(name_or_path));
    } catch (const json::exception& e) {
      throw Error(ErrorKind::ConfigError, name_or_path + ": " + e.what());
    }
  }
  return preset_domain(name_or_path);
}

}  // namespace cauchy::io
