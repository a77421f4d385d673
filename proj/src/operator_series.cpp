#include "cauchy/operator_series.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "cauchy/cauchy_ops.hpp"
#include "cauchy/error.hpp"
#include "cauchy/fft.hpp"
#include "cauchy/numeric.hpp"

namespace cauchy {

namespace {

// p_n = C_Delta N_n f for n = 0..M on a grid wide enough that the shift by
// n never wraps around.
std::vector<HardyFunction> projections(const BoundaryFunction& f, std::size_t M) {
  if (f.on_curve || f.circle_radius != 1.0) {
    throw Error(ErrorKind::SizeError, "series operator acts on unit-circle samples");
  }
  const auto padded = resample(f, fft::next_power_of_two(f.N() + 2 * M + 2));
  std::vector<HardyFunction> p(M + 1);
  parallel_for(M + 1, [&](std::size_t n) {
    p[n] = riesz_projection(monomial_multiply(padded, static_cast<int>(n)));
  });
  return p;
}

// sum_{m,n <= M} a_mn M_m p_n, accumulated in a fixed order.
HardyFunction accumulate(const KernelExpansion& e, const std::vector<HardyFunction>& p,
                         std::size_t M) {
  const std::size_t len = p.front().taylor.size();
  HardyFunction out;
  out.taylor.assign(len + M, cplx{});
  std::vector<cplx> row(len);
  for (std::size_t m = 0; m <= M; ++m) {
    std::fill(row.begin(), row.end(), cplx{});
    for (std::size_t n = 0; n <= M; ++n) {
      const cplx a = e.at(m, n);
      if (a == cplx{}) continue;
      // written out to avoid the NaN-recovery path of complex operator*
      const double ar = a.real(), ai = a.imag();
      const cplx* src = p[n].taylor.data();
      for (std::size_t k = 0; k < len; ++k) {
        row[k] += cplx(ar * src[k].real() - ai * src[k].imag(), ar * src[k].imag() + ai * src[k].real());
      }
    }
    for (std::size_t k = 0; k < len; ++k) out.taylor[k + m] += row[k];
  }
  return out;
}

double hardy_distance(const HardyFunction& a, const HardyFunction& b) {
  HardyFunction d;
  d.taylor.resize(std::max(a.taylor.size(), b.taylor.size()));
  for (std::size_t k = 0; k < d.taylor.size(); ++k) {
    const cplx x = k < a.taylor.size() ? a.taylor[k] : cplx{};
    const cplx y = k < b.taylor.size() ? b.taylor[k] : cplx{};
    d.taylor[k] = x - y;
  }
  return hardy_norm(d);
}

}  // namespace

SeriesOperator::SeriesOperator(AnalyticDomain domain, KernelExpansion expansion,
                               std::optional<std::size_t> M)
    : domain_(std::move(domain)), expansion_(std::move(expansion)), M_(M.value_or(expansion_.M)) {
  if (expansion_.domain_hash != domain_fingerprint(domain_)) {
    throw Error(ErrorKind::ConfigError, "kernel expansion was extracted from a different domain");
  }
  if (M_ > expansion_.M) throw Error(ErrorKind::ConfigError, "truncation exceeds the expansion");
}

SeriesOperator SeriesOperator::build(const AnalyticDomain& domain) {
  return SeriesOperator(domain, kernel_coefficients_auto(domain, RadiiPair::defaults(domain.R())));
}

HardyFunction apply_series_operator(const SeriesOperator& op, const BoundaryFunction& f) {
  return accumulate(op.expansion(), projections(f, op.M()), op.M());
}

double operator_norm_upper(const SeriesOperator& op) {
  const auto& e = op.expansion();
  if (op.M() == e.M) return e.abs_sum + e.tail_bound;
  const auto head = e.truncated(op.M());
  return head.abs_sum + head.tail_bound;
}

FourierCoefficients random_trig_polynomial(std::size_t N, int degree, std::uint64_t seed,
                                           bool analytic_only) {
  auto c = FourierCoefficients::zeros(N);
  degree = std::min(degree, c.max_frequency());
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  for (int k = -degree; k <= degree; ++k) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    if (analytic_only && k < 0) continue;
    c.set(k, {re, im});
  }
  return c;
}

double operator_norm_lower_mc(const SeriesOperator& op, std::size_t trials, std::uint64_t seed,
                              std::size_t N) {
  std::mt19937_64 seeds(seed);
  std::vector<std::uint64_t> trial_seeds(trials);
  for (auto& s : trial_seeds) s = seeds();
  const int degree = static_cast<int>(N / 4);
  std::vector<double> ratios(trials);
  parallel_for(trials, [&](std::size_t t) {
    const auto f = synthesize(random_trig_polynomial(N, degree, trial_seeds[t], t % 2 == 0));
    ratios[t] = hardy_norm(apply_series_operator(op, f)) / l2_norm_circle(f);
  });
  return ratios.empty() ? 0.0 : *std::max_element(ratios.begin(), ratios.end());
}

std::vector<ConvergenceStep> partial_sum_convergence(const SeriesOperator& op,
                                                     const BoundaryFunction& f,
                                                     std::span<const std::size_t> schedule) {
  const auto p = projections(f, op.M());
  const auto full = accumulate(op.expansion(), p, op.M());
  const double norm_f = l2_norm_circle(f);
  std::vector<ConvergenceStep> steps;
  steps.reserve(schedule.size());
  for (const std::size_t M : schedule) {
    if (M > op.M()) throw Error(ErrorKind::ConfigError, "schedule entry exceeds the truncation");
    const auto partial = accumulate(op.expansion(), p, M);
    steps.push_back({M, hardy_distance(partial, full),
                     tail_sum_bound(op.expansion().sup_H, op.expansion().radii, M) * norm_f});
  }
  return steps;
}

double equivalence_check(const SeriesOperator& op, const BoundaryFunction& f,
                         std::span<const cplx> probes, std::size_t N_quad) {
  const auto series = apply_series_operator(op, f);
  const auto direct = direct_conjugated_operator(op.domain(), resample(f, N_quad), probes);
  double worst = 0.0;
  for (std::size_t i = 0; i < probes.size(); ++i)
    worst = std::max(worst, std::abs(series(probes[i]) - direct.values[i]));
  return worst;
}

}  // namespace cauchy
