// One PASS/FAIL line per acceptance criterion; exit status is the number of
// failures.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "cauchy/cauchy_ops.hpp"
#include "cauchy/cli.hpp"
#include "cauchy/numeric.hpp"
#include "cauchy/operator_series.hpp"
#include "oracles.hpp"

using namespace cauchy;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

std::vector<cplx> probes(std::uint64_t seed, std::size_t n, double max_radius) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> rad(0.0, max_radius), ang(0.0, kTwoPi);
  std::vector<cplx> p(n);
  for (auto& z : p) z = std::polar(rad(rng), ang(rng));
  return p;
}

BoundaryFunction trig(std::size_t N, int degree, std::uint64_t seed, bool analytic = false) {
  return synthesize(random_trig_polynomial(N, degree, seed, analytic));
}

const SeriesOperator& op_for(const std::string& name) {
  static std::map<std::string, SeriesOperator> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, SeriesOperator::build(preset_domain(name))).first;
  return it->second;
}

double max_of(const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); }

Outcome identity_collapse() {
  const auto& op = op_for("disk");
  const auto& e = op.expansion();
  const double a00 = std::abs(e.at(0, 0) - 1.0);
  const double rest = e.abs_sum - std::abs(e.at(0, 0));
  std::vector<double> errs(50);
  parallel_for(errs.size(), [&](std::size_t i) {
    const auto f = trig(128, 40, 100 + i);
    const auto a = apply_series_operator(op, f);
    const auto p = riesz_projection(f);
    double err = 0.0;
    for (std::size_t k = 0; k < std::max(a.taylor.size(), p.taylor.size()); ++k) {
      const cplx x = k < a.taylor.size() ? a.taylor[k] : 0.0;
      const cplx y = k < p.taylor.size() ? p.taylor[k] : 0.0;
      err = std::max(err, std::abs(x - y));
    }
    errs[i] = err;
  });
  const double apply_err = max_of(errs);
  return {a00 <= 1e-12 && rest <= 1e-11 && apply_err <= 1e-12,
          fmt("|a00-1|=%.2e sum|a_mn|(others)=%.2e max|A f - P f|=%.2e over 50 f", a00, rest, apply_err)};
}

Outcome derived_coefficients() {
  const auto& e = op_for("perturbed-disk").expansion();
  const std::size_t M = std::min<std::size_t>(e.M, 24);
  const auto ref = oracle::quadratic_map_kernel(0.2, M);
  struct Cell {
    std::size_t m, n;
    double value;
  };
  const Cell named[] = {{1, 0, 0.0}, {0, 1, 0.0}, {1, 1, 0.04}, {2, 0, -0.02}, {0, 2, -0.02}};
  double named_err = 0.0, oracle_named = 0.0, table_err = 0.0;
  for (const auto& c : named) {
    named_err = std::max(named_err, std::abs(e.at(c.m, c.n) - c.value));
    oracle_named = std::max(oracle_named, std::abs(ref[c.m][c.n] - c.value));
  }
  for (std::size_t m = 0; m <= M; ++m)
    for (std::size_t n = 0; n <= M; ++n) table_err = std::max(table_err, std::abs(e.at(m, n) - ref[m][n]));
  return {named_err <= 1e-10 && oracle_named <= 1e-14 && table_err <= 1e-10,
          fmt("named cells err=%.2e, oracle self-check=%.2e, full %zux%zu table vs oracle=%.2e", named_err,
              oracle_named, M + 1, M + 1, table_err)};
}

Outcome kernel_invariants() {
  bool pass = true;
  std::string detail;
  for (const auto& name : preset_names()) {
    const auto& e = op_for(name).expansion();
    double a00 = std::abs(e.at(0, 0) - 1.0), sym = 0.0, anti = 0.0, excess = -1e300;
    for (std::size_t m = 0; m <= e.M; ++m)
      for (std::size_t n = 0; n <= e.M; ++n) {
        sym = std::max(sym, std::abs(e.at(m, n) - e.at(n, m)));
        excess = std::max(excess, std::abs(e.at(m, n)) - coefficient_bound(e.sup_H, e.radii, m, n));
      }
    for (std::size_t k = 1; k <= e.M; ++k) {
      std::vector<cplx> d;
      for (std::size_t m = 0; m <= k; ++m) d.push_back(e.at(m, k - m));
      anti = std::max(anti, std::abs(pairwise_sum(std::span<const cplx>(d))));
    }
    pass = pass && a00 <= 1e-10 && sym <= 1e-10 && anti <= 1e-9 && excess <= 1e-9;
    detail += fmt("%s[M=%zu]: a00 %.1e sym %.1e antidiag %.1e bound-excess %.1e; ", name.c_str(), e.M, a00, sym,
                  anti, excess);
  }
  return {pass, detail};
}

Outcome equivalence() {
  bool pass = true;
  std::string detail;
  const auto pts = probes(4, 16, 0.8);
  for (const auto& name : preset_names()) {
    const auto& op = op_for(name);
    std::vector<double> errs(20);
    parallel_for(errs.size(), [&](std::size_t i) { errs[i] = equivalence_check(op, trig(64, 8, 700 + i), pts, 512); });
    pass = pass && max_of(errs) <= 1e-8;
    detail += fmt("%s[M=%zu] %.2e; ", name.c_str(), op.M(), max_of(errs));
  }
  const auto& full = op_for("perturbed-disk");
  const auto f = trig(64, 8, 77);
  double prev = -1.0;
  detail += "refinement:";
  for (const auto& [M, N] : {std::pair<std::size_t, std::size_t>{8, 32}, {16, 64}, {32, 128}, {64, 256}}) {
    const double err = equivalence_check(SeriesOperator(full.domain(), full.expansion(), M), f, pts, N);
    if (prev >= 0.0) pass = pass && (err <= 1e-3 * prev || err <= 1e-11);
    detail += fmt(" (%zu,%zu) %.1e", M, N, err);
    prev = err;
  }
  return {pass, detail};
}

Outcome boundedness() {
  bool pass = true;
  std::string detail;
  for (const auto& name : preset_names()) {
    const auto& op = op_for(name);
    const double upper = operator_norm_upper(op);
    std::vector<double> slack(500);
    parallel_for(slack.size(), [&](std::size_t i) {
      const auto f = trig(64, 16, 5000 + i, i % 4 == 0);
      slack[i] = hardy_norm(apply_series_operator(op, f)) - upper * l2_norm_circle(f);
    });
    const double lower = operator_norm_lower_mc(op, 200, 13);
    pass = pass && max_of(slack) <= 1e-9 && lower <= upper;
    detail += fmt("%s: max(||Af||-U||f||)=%.2e lower=%.6f upper=%.6f; ", name.c_str(), max_of(slack), lower, upper);
  }
  return {pass, detail};
}

Outcome representation() {
  const auto dom = preset_domain("perturbed-disk");
  std::mt19937_64 rng(8);
  std::normal_distribution<double> g(0.0, 1.0);
  HardyFunction h;
  for (int k = 0; k <= 8; ++k) h.taylor.emplace_back(g(rng), g(rng));
  auto pts = probes(9, 16, 0.7);
  pts.push_back(std::polar(0.7, 0.3));
  std::vector<double> errs;
  std::string detail;
  for (std::size_t N : {32, 64, 128, 256}) {
    errs.push_back(cauchy_representation_check(dom, h, pts, N));
    detail += fmt("N=%zu %.2e; ", N, errs.back());
  }
  bool spectral = true;
  for (std::size_t i = 1; i < errs.size(); ++i) spectral = spectral && (errs[i] <= 1e-3 * errs[i - 1] || errs[i] <= 1e-12);
  return {errs.back() <= 1e-9 && spectral, detail};
}

Outcome isometry() {
  double worst = 0.0;
  for (const auto& name : preset_names()) {
    const auto dom = preset_domain(name);
    std::vector<double> errs(100);
    parallel_for(errs.size(), [&](std::size_t i) {
      auto f = trig(256, 24, 900 + i);
      f.on_curve = true;
      errs[i] = std::abs(l2_norm_circle(transplant_boundary(dom, f, Direction::ToDisk)) - l2_norm_curve(f, dom));
    });
    worst = std::max(worst, max_of(errs));
  }
  return {worst <= 1e-10, fmt("max | ||f||_L2(dD) - ||U f||_L2(circle) | = %.2e over 3 x 100 f", worst)};
}

Outcome partial_sums() {
  bool pass = true;
  double worst_ratio = 0.0;
  const std::vector<std::size_t> schedule{2, 4, 8, 16};
  for (const auto& name : preset_names()) {
    const auto& op = op_for(name);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      for (const auto& s : partial_sum_convergence(op, trig(128, 16, 40 + seed), schedule)) {
        pass = pass && s.deviation <= s.bound + 1e-10;
        if (s.bound > 0.0) worst_ratio = std::max(worst_ratio, s.deviation / s.bound);
      }
    }
  }
  return {pass, fmt("max deviation/bound = %.2e over 3 presets x 10 f x M' in {2,4,8,16}", worst_ratio)};
}

std::string report(const std::string& preset) {
  const char* argv[] = {"cauchy", "report", "--domain", preset.c_str(), "--seed", "2024"};
  std::ostringstream out, err;
  cli::main(6, argv, out, err);
  return out.str();
}

Outcome determinism() {
  bool pass = true;
  for (const auto& name : preset_names()) {
    const auto first = report(name);
    ::setenv("CAUCHY_THREADS", "1", 1);
    const auto second = report(name);
    ::unsetenv("CAUCHY_THREADS");
    pass = pass && !first.empty() && first == second;
  }
  return {pass, "report output compared byte-for-byte on every preset (default threads vs CAUCHY_THREADS=1)"};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"identity-domain collapse", identity_collapse},
      {"derived coefficients", derived_coefficients},
      {"kernel invariants", kernel_invariants},
      {"series vs quadrature equivalence", equivalence},
      {"boundedness", boundedness},
      {"Cauchy representation", representation},
      {"isometry", isometry},
      {"partial-sum convergence", partial_sums},
      {"determinism", determinism},
  };
  int failures = 0, index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > 30.0) {
      o.pass = false;
      o.detail += " [exceeded 30 s]";
    }
    std::printf("%s %d %s (%.1f s): %s\n", o.pass ? "PASS" : "FAIL", index, name, secs, o.detail.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures;
}
