#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "cauchy/analytic_domain.hpp"
#include "cauchy/boundary_functions.hpp"
#include "cauchy/power_series.hpp"

namespace cauchy::io {

using nlohmann::json;

/// [[re, im], ...]
json complex_array(std::span<const cplx> values);
std::vector<cplx> parse_complex_array(const json& j);

json to_json(const PowerSeries& s);
PowerSeries series_from_json(const json& j);

/// { "N": int, "samples": [[re,im],...], "circle_radius": number }
json to_json(const BoundaryFunction& f);
BoundaryFunction boundary_function_from_json(const json& j);

/// { "name": string, "psi": [[re,im],...], "R": number|null }
json domain_spec(const AnalyticDomain& dom);
AnalyticDomain domain_from_json(const json& j);

/// A preset name, or a path to a domain spec file.
AnalyticDomain load_domain(const std::string& name_or_path);

json read_json_file(const std::string& path);

}  // namespace cauchy::io
