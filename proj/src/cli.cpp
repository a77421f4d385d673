#include "cauchy/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include "cauchy/cauchy_ops.hpp"
#include "cauchy/error.hpp"
#include "cauchy/fft.hpp"
#include "cauchy/io.hpp"
#include "cauchy/kernel_expansion.hpp"
#include "cauchy/numeric.hpp"
#include "cauchy/operator_series.hpp"

namespace cauchy::cli {

using nlohmann::json;

namespace {

constexpr double kRepresentationTolerance = 1e-9;
constexpr double kEquivalenceTolerance = 1e-8;
constexpr double kIsometryTolerance = 1e-10;
constexpr double kConvergenceSlack = 1e-10;
constexpr double kRepresentationProbeRadius = 0.7;
constexpr double kEquivalenceProbeRadius = 0.8;
constexpr std::size_t kMaxSize = 1 << 16;

bool is_domain_failure(ErrorKind kind) {
  return kind != ErrorKind::ConfigError && kind != ErrorKind::SizeError;
}

json error_json(std::string_view kind, const std::string& message, int code) {
  return json{{"error", kind}, {"message", message}, {"exit_code", code}};
}

std::string fingerprint_hex(const AnalyticDomain& dom) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(domain_fingerprint(dom)));
  return buf;
}

std::vector<cplx> random_probes(std::uint64_t seed, std::size_t n, double max_radius) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> rad(0.0, max_radius), ang(0.0, kTwoPi);
  std::vector<cplx> p(n);
  for (auto& z : p) z = std::polar(rad(rng), ang(rng));
  return p;
}

std::size_t f_grid(const RunConfig& c) { return std::max<std::size_t>(c.N, fft::next_power_of_two(4 * c.degree + 4)); }

BoundaryFunction random_input(const RunConfig& c, std::uint64_t seed, bool analytic = false) {
  return synthesize(random_trig_polynomial(f_grid(c), static_cast<int>(c.degree), seed, analytic));
}

KernelExpansion expansion_for(const AnalyticDomain& dom, const RunConfig& c) {
  const auto radii = RadiiPair::defaults(dom.R());
  if (!c.M && !c.grid_N) return kernel_coefficients_auto(dom, radii);
  std::size_t M = c.M.value_or(kMaxTruncation);
  if (!c.M) {
    // fixed grid, automatic truncation: pick M from the table on that grid
    const auto full = kernel_coefficients(dom, radii, std::min(M, *c.grid_N - 1), *c.grid_N);
    M = full.M;
    for (std::size_t k = 0; k <= full.M; ++k) {
      const auto t = full.truncated(k);
      if (t.tail_bound <= kAutoTailRatio * t.abs_sum) {
        M = k;
        break;
      }
    }
    return full.truncated(M);
  }
  return kernel_coefficients(dom, radii, M, c.grid_N.value_or(default_grid_size(M)));
}

json expansion_summary(const KernelExpansion& e) {
  return json{{"M", e.M},
              {"grid_N", e.grid_N},
              {"r", e.radii.r},
              {"s", e.radii.s},
              {"sup_H", e.sup_H},
              {"abs_sum", e.abs_sum},
              {"tail_bound", e.tail_bound},
              {"alias_risk", e.alias_risk}};
}

json bound_json(const KernelExpansion& e) {
  json j = expansion_summary(e);
  j["norm_bound"] = e.abs_sum + e.tail_bound;
  j["norm_upper"] = e.abs_sum + e.tail_bound;
  return j;
}

json coefficient_checks(const KernelExpansion& e) {
  double a00 = std::abs(e.at(0, 0) - 1.0);
  double symmetry = 0.0, antidiagonal = 0.0, excess = -std::numeric_limits<double>::infinity();
  for (std::size_t m = 0; m <= e.M; ++m) {
    for (std::size_t n = 0; n <= e.M; ++n) {
      symmetry = std::max(symmetry, std::abs(e.at(m, n) - e.at(n, m)));
      excess = std::max(excess, std::abs(e.at(m, n)) - coefficient_bound(e.sup_H, e.radii, m, n));
    }
  }
  for (std::size_t k = 1; k <= e.M; ++k) {
    std::vector<cplx> diag;
    for (std::size_t m = 0; m <= k; ++m) diag.push_back(e.at(m, k - m));
    antidiagonal = std::max(antidiagonal, std::abs(pairwise_sum(std::span<const cplx>(diag))));
  }
  const bool pass = a00 <= 1e-10 && symmetry <= 1e-10 && antidiagonal <= 1e-9 && excess <= kCoefficientTolerance;
  return json{{"a00_error", a00},
              {"symmetry_error", symmetry},
              {"antidiagonal_error", antidiagonal},
              {"bound_excess", excess},
              {"pass", pass}};
}

json validation_json(const AnalyticDomain& dom) {
  const auto report = validate_conformal(dom.psi(), dom.R());
  return json{{"name", dom.name()},
              {"psi", io::complex_array(dom.psi().coeffs())},
              {"R", dom.R()},
              {"fingerprint", fingerprint_hex(dom)},
              {"valid", report.valid()},
              {"min_abs_derivative", report.min_abs_derivative},
              {"derivative_roots", io::complex_array(report.derivative_roots)},
              {"min_root_modulus", std::isfinite(report.min_root_modulus) ? json(report.min_root_modulus) : json()},
              {"samples", report.samples},
              {"min_pairwise_distance", report.min_pairwise_distance},
              {"winding_number", report.winding_number},
              {"self_intersection", report.self_intersection},
              {"diameter", dom.diameter()}};
}

json suite_representation(const AnalyticDomain& dom, const RunConfig& c) {
  std::mt19937_64 rng(c.seed);
  std::normal_distribution<double> g(0.0, 1.0);
  HardyFunction h;
  for (std::size_t k = 0; k <= c.degree; ++k) h.taylor.emplace_back(g(rng), g(rng));
  const auto probes = random_probes(c.seed + 1, c.probes, kRepresentationProbeRadius);
  const double err = cauchy_representation_check(dom, h, probes, c.N);
  const double tol = c.tolerance.value_or(kRepresentationTolerance);
  return json{{"suite", "representation"}, {"max_error", err}, {"degree", c.degree}, {"probes", c.probes},
              {"N", c.N}, {"tolerance", tol}, {"pass", err <= tol}};
}

json suite_equivalence(const SeriesOperator& op, const RunConfig& c) {
  const auto probes = random_probes(c.seed, c.probes, kEquivalenceProbeRadius);
  const std::size_t count = c.samples.value_or(20);
  std::vector<double> errors(count);
  parallel_for(count, [&](std::size_t i) {
    auto f = random_input(c, c.seed * 1000003ULL + i);
    if (f.N() > c.N_quad) throw Error(ErrorKind::ConfigError, "N_quad must be at least the input grid size");
    errors[i] = equivalence_check(op, f, probes, c.N_quad);
  });
  const double err = *std::max_element(errors.begin(), errors.end());
  const double tol = c.tolerance.value_or(kEquivalenceTolerance);
  return json{{"suite", "equivalence"},
              {"max_error", err},
              {"M", op.M()},
              {"N_quad", c.N_quad},
              {"norm_upper", operator_norm_upper(op)},
              {"norm_lower_mc", operator_norm_lower_mc(op, c.trials, c.seed)},
              {"samples", count},
              {"probes", c.probes},
              {"tolerance", tol},
              {"pass", err <= tol}};
}

json suite_isometry(const AnalyticDomain& dom, const RunConfig& c) {
  const std::size_t count = c.samples.value_or(100);
  std::vector<double> errors(count);
  parallel_for(count, [&](std::size_t i) {
    auto f = random_input(c, c.seed * 1000003ULL + i);
    f.on_curve = true;
    const auto g = transplant_boundary(dom, f, Direction::ToDisk);
    errors[i] = std::abs(l2_norm_circle(g) - l2_norm_curve(f, dom));
  });
  const double err = *std::max_element(errors.begin(), errors.end());
  const double tol = c.tolerance.value_or(kIsometryTolerance);
  return json{{"suite", "isometry"}, {"max_error", err}, {"samples", count}, {"degree", c.degree},
              {"N", f_grid(c)}, {"tolerance", tol}, {"pass", err <= tol}};
}

json suite_convergence(const SeriesOperator& op, const RunConfig& c) {
  for (auto m : c.schedule) {
    if (m > op.M()) throw Error(ErrorKind::ConfigError, "schedule entry exceeds the truncation M");
  }
  const auto f = random_input(c, c.seed);
  const auto steps = partial_sum_convergence(op, f, c.schedule);
  const double slack = c.tolerance.value_or(kConvergenceSlack);
  bool pass = true;
  json rows = json::array();
  for (const auto& s : steps) {
    pass = pass && s.deviation <= s.bound + slack;
    rows.push_back(json{{"M", s.M}, {"deviation", s.deviation}, {"bound", s.bound}});
  }
  return json{{"suite", "convergence"}, {"M", op.M()}, {"steps", rows}, {"tolerance", slack}, {"pass", pass}};
}

json run_suite(const std::string& suite, const AnalyticDomain& dom, const RunConfig& c,
               const std::optional<SeriesOperator>& op) {
  if (suite == "representation") return suite_representation(dom, c);
  if (suite == "isometry") return suite_isometry(dom, c);
  if (suite == "equivalence") return suite_equivalence(*op, c);
  return suite_convergence(*op, c);
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string coefficient_csv(const KernelExpansion& e) {
  std::ostringstream os;
  os << "m,n,re,im,paper_bound\n";
  for (std::size_t m = 0; m <= e.M; ++m) {
    for (std::size_t n = 0; n <= e.M; ++n) {
      const cplx a = e.at(m, n);
      os << m << ',' << n << ',' << format_double(a.real()) << ',' << format_double(a.imag()) << ','
         << format_double(coefficient_bound(e.sup_H, e.radii, m, n)) << '\n';
    }
  }
  return os.str();
}

json coefficient_json(const KernelExpansion& e) {
  json rows = json::array();
  for (std::size_t m = 0; m <= e.M; ++m) {
    for (std::size_t n = 0; n <= e.M; ++n) {
      const cplx a = e.at(m, n);
      rows.push_back(json{{"m", m}, {"n", n}, {"re", a.real()}, {"im", a.imag()},
                          {"paper_bound", coefficient_bound(e.sup_H, e.radii, m, n)}});
    }
  }
  return rows;
}

void emit(const std::string& text, const RunConfig& c, std::ostream& out) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.out_path, std::ios::binary);
  if (!file) throw Error(ErrorKind::ConfigError, "cannot write " + c.out_path);
  file << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int dispatch(const RunConfig& c, std::ostream& out) {
  const auto dom = io::load_domain(c.domain);

  if (c.command == "validate") {
    emit(dump(validation_json(dom)), c, out);
    return kExitOk;
  }

  if (c.command == "coeffs") {
    const auto e = expansion_for(dom, c);
    const auto checks = coefficient_checks(e);
    if (c.format == "csv") {
      emit(coefficient_csv(e), c, out);
      if (!c.out_path.empty()) out << dump(json{{"expansion", expansion_summary(e)}, {"checks", checks}});
    } else {
      emit(dump(json{{"expansion", expansion_summary(e)}, {"checks", checks}, {"coefficients", coefficient_json(e)}}),
           c, out);
    }
    return checks["pass"].get<bool>() ? kExitOk : kExitTolerance;
  }

  if (c.command == "bound") {
    emit(dump(bound_json(expansion_for(dom, c))), c, out);
    return kExitOk;
  }

  const SeriesOperator op(dom, expansion_for(dom, c));

  if (c.command == "apply") {
    const auto f = c.f_path.empty() ? random_input(c, c.seed)
                                    : io::boundary_function_from_json(io::read_json_file(c.f_path));
    if (f.on_curve || f.circle_radius != 1.0) throw Error(ErrorKind::ConfigError, "apply expects samples on the unit circle");
    const auto g = apply_series_operator(op, f);
    emit(dump(json{{"domain", dom.name()},
                   {"M", op.M()},
                   {"input_N", f.N()},
                   {"input_norm", l2_norm_circle(f)},
                   {"hardy_norm", hardy_norm(g)},
                   {"norm_upper", operator_norm_upper(op)},
                   {"taylor", io::complex_array(g.taylor)}}),
         c, out);
    return kExitOk;
  }

  if (c.command == "verify") {
    const auto doc = run_suite(c.suite, dom, c, op);
    emit(dump(doc), c, out);
    return doc["pass"].get<bool>() ? kExitOk : kExitTolerance;
  }

  // report
  json suites = json::object();
  bool pass = true;
  for (const std::string suite : {"representation", "equivalence", "isometry", "convergence"}) {
    suites[suite] = run_suite(suite, dom, c, op);
    pass = pass && suites[suite]["pass"].get<bool>();
  }
  const auto checks = coefficient_checks(op.expansion());
  pass = pass && checks["pass"].get<bool>();
  emit(dump(json{{"domain", validation_json(dom)},
                 {"bound", bound_json(op.expansion())},
                 {"coefficient_checks", checks},
                 {"suites", suites},
                 {"seed", c.seed},
                 {"pass", pass}}),
       c, out);
  return pass ? kExitOk : kExitTolerance;
}

bool power_of_two_in(std::size_t n, std::size_t lo) { return fft::is_power_of_two(n) && n >= lo && n <= kMaxSize; }

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::ConfigError, message);
}

std::optional<std::size_t> parse_truncation(const json& j) {
  if (j.is_string()) {
    require(j.get<std::string>() == "auto", "M must be \"auto\" or an integer");
    return std::nullopt;
  }
  return j.get<std::size_t>();
}

std::optional<std::size_t> parse_truncation(const std::string& s) {
  if (s == "auto") return std::nullopt;
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(used == s.size() && !s.empty() && s[0] != '-', "M must be \"auto\" or an integer");
  return static_cast<std::size_t>(value);
}

}  // namespace

void RunConfig::check() const {
  static const std::vector<std::string> commands{"validate", "coeffs", "bound", "apply", "verify", "report"};
  static const std::vector<std::string> suites{"representation", "equivalence", "isometry", "convergence"};
  require(std::find(commands.begin(), commands.end(), command) != commands.end(), "unknown command: " + command);
  if (command == "verify")
    require(std::find(suites.begin(), suites.end(), suite) != suites.end(), "unknown verify suite: " + suite);
  require(!domain.empty(), "a domain is required");
  require(!M || *M <= kMaxTruncation, "M must be at most 64");
  require(!grid_N || power_of_two_in(*grid_N, 8), "grid must be a power of two in [8, 65536]");
  require(!(M && grid_N) || *grid_N > *M, "grid must exceed M");
  require(power_of_two_in(N_quad, 8), "N_quad must be a power of two in [8, 65536]");
  require(power_of_two_in(N, 8), "N must be a power of two in [8, 65536]");
  require(probes >= 1 && probes <= 10000, "probes must lie in [1, 10000]");
  require(degree <= 4096, "degree must be at most 4096");
  require(!samples || (*samples >= 1 && *samples <= 100000), "samples must lie in [1, 100000]");
  require(trials >= 1 && trials <= 100000, "trials must lie in [1, 100000]");
  require(!tolerance || (std::isfinite(*tolerance) && *tolerance > 0.0), "tolerance must be positive");
  require(!schedule.empty(), "schedule must not be empty");
  require(format == "json" || format == "csv", "format must be json or csv");
  require(format == "json" || command == "coeffs", "csv output is only available for coeffs");
}

RunConfig apply_config_file(const json& file, RunConfig base) {
  require(file.is_object(), "config file must hold a JSON object");
  try {
    for (const auto& [key, v] : file.items()) {
      if (key == "domain") base.domain = v.get<std::string>();
      else if (key == "M") base.M = parse_truncation(v);
      else if (key == "grid") base.grid_N = v.get<std::size_t>();
      else if (key == "N_quad") base.N_quad = v.get<std::size_t>();
      else if (key == "N") base.N = v.get<std::size_t>();
      else if (key == "probes") base.probes = v.get<std::size_t>();
      else if (key == "degree") base.degree = v.get<std::size_t>();
      else if (key == "samples") base.samples = v.get<std::size_t>();
      else if (key == "trials") base.trials = v.get<std::size_t>();
      else if (key == "seed") base.seed = v.get<std::uint64_t>();
      else if (key == "tolerance") base.tolerance = v.get<double>();
      else if (key == "schedule") base.schedule = v.get<std::vector<std::size_t>>();
      else if (key == "f") base.f_path = v.get<std::string>();
      else if (key == "out") base.out_path = v.get<std::string>();
      else if (key == "format") base.format = v.get<std::string>();
      else throw Error(ErrorKind::ConfigError, "unknown config key: " + key);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ConfigError, std::string("config file: ") + e.what());
  }
  return base;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.check();
    return dispatch(config, out);
  } catch (const Error& e) {
    const int code = is_domain_failure(e.kind()) ? kExitValidation : kExitConfig;
    err << error_json(to_string(e.kind()), e.what(), code).dump() << "\n";
    return code;
  } catch (const json::exception& e) {
    err << error_json("ConfigError", e.what(), kExitConfig).dump() << "\n";
    return kExitConfig;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cauchy transform on analytic domains: kernel expansion, norm bounds, verification"};
  app.require_subcommand(1, 1);

  std::string config_path, domain, M, f_path, out_path, format;
  std::size_t grid = 0, N_quad = 0, N = 0, probes = 0, degree = 0, samples = 0, trials = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::vector<std::size_t> schedule;
  std::string suite;

  app.add_option("--config", config_path, "JSON config file; flags override its keys");
  auto* o_domain = app.add_option("--domain", domain, "preset name or domain spec JSON path");
  auto* o_M = app.add_option("--M", M, "truncation order or \"auto\"");
  auto* o_grid = app.add_option("--grid", grid, "extraction grid size (power of two)");
  auto* o_Nq = app.add_option("--N-quad,--N_quad", N_quad, "direct quadrature nodes");
  auto* o_N = app.add_option("--N", N, "boundary samples");
  auto* o_probes = app.add_option("--probes", probes, "number of interior probes");
  auto* o_degree = app.add_option("--degree", degree, "degree of random test data");
  auto* o_samples = app.add_option("--samples", samples, "number of random inputs");
  auto* o_trials = app.add_option("--trials", trials, "Monte-Carlo trials");
  auto* o_seed = app.add_option("--seed", seed, "random seed");
  auto* o_tol = app.add_option("--tolerance", tolerance, "pass threshold of the verify suite");
  auto* o_schedule = app.add_option("--schedule", schedule, "partial-sum truncations")->delimiter(',');
  auto* o_f = app.add_option("--f", f_path, "BoundaryFunction JSON on the unit circle");
  auto* o_out = app.add_option("--out", out_path, "output file (default stdout)");
  auto* o_format = app.add_option("--format", format, "json or csv");

  app.add_subcommand("validate", "conformality report")->fallthrough();
  app.add_subcommand("coeffs", "kernel coefficient table and invariant checks")->fallthrough();
  app.add_subcommand("bound", "operator norm bound")->fallthrough();
  app.add_subcommand("apply", "apply the series operator")->fallthrough();
  auto* verify = app.add_subcommand("verify", "run one verification suite")->fallthrough();
  verify->add_option("suite", suite, "representation | equivalence | isometry | convergence")->required();
  app.add_subcommand("report", "full pipeline as one JSON document")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << error_json("ConfigError", e.what(), kExitConfig).dump() << "\n";
    return kExitConfig;
  }

  RunConfig c;
  c.command = app.get_subcommands().front()->get_name();
  if (c.command == "coeffs") c.format = "csv";
  c.suite = suite;
  try {
    if (!config_path.empty()) c = apply_config_file(io::read_json_file(config_path), c);
    if (o_domain->count()) c.domain = domain;
    if (o_M->count()) c.M = parse_truncation(M);
    if (o_grid->count()) c.grid_N = grid;
    if (o_Nq->count()) c.N_quad = N_quad;
    if (o_N->count()) c.N = N;
    if (o_probes->count()) c.probes = probes;
    if (o_degree->count()) c.degree = degree;
    if (o_samples->count()) c.samples = samples;
    if (o_trials->count()) c.trials = trials;
    if (o_seed->count()) c.seed = seed;
    if (o_tol->count()) c.tolerance = tolerance;
    if (o_schedule->count()) c.schedule = schedule;
    if (o_f->count()) c.f_path = f_path;
    if (o_out->count()) c.out_path = out_path;
    if (o_format->count()) c.format = format;
  } catch (const Error& e) {
    err << error_json(to_string(e.kind()), e.what(), kExitConfig).dump() << "\n";
    return kExitConfig;
  }
  return run(c, out, err);
}

}  // namespace cauchy::cli
