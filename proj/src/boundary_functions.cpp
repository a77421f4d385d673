#include "cauchy/boundary_functions.hpp"

#include <cmath>

#include "cauchy/error.hpp"
#include "cauchy/fft.hpp"
#include "cauchy/numeric.hpp"

namespace cauchy {

namespace {

void require_power_of_two(std::size_t N) {
  if (!fft::is_power_of_two(N) || N < 2) {
    throw Error(ErrorKind::SizeError, "sample count " + std::to_string(N) + " is not a power of two");
  }
}

}  // namespace

FourierCoefficients::FourierCoefficients(std::vector<cplx> values) : values_(std::move(values)) {
  require_power_of_two(values_.size());
}

FourierCoefficients FourierCoefficients::zeros(std::size_t N) {
  return FourierCoefficients(std::vector<cplx>(N));
}

std::size_t FourierCoefficients::slot(int k) const {
  return k >= 0 ? static_cast<std::size_t>(k) : N() - static_cast<std::size_t>(-k);
}

cplx FourierCoefficients::at(int k) const {
  if (k < min_frequency() || k > max_frequency()) return 0.0;
  return values_[slot(k)];
}

void FourierCoefficients::set(int k, cplx v) {
  if (k < min_frequency() || k > max_frequency()) {
    throw Error(ErrorKind::SizeError, "frequency " + std::to_string(k) + " outside the band");
  }
  values_[slot(k)] = v;
}

cplx HardyFunction::operator()(cplx z) const {
  cplx acc = 0.0;
  for (std::size_t k = taylor.size(); k-- > 0;) acc = acc * z + taylor[k];
  return acc;
}

FourierCoefficients analyze(const BoundaryFunction& f) {
  require_power_of_two(f.N());
  auto c = fft::forward(f.samples);
  const double inv = 1.0 / static_cast<double>(f.N());
  for (auto& x : c) x *= inv;
  return FourierCoefficients(std::move(c));
}

BoundaryFunction synthesize(const FourierCoefficients& c, double circle_radius) {
  return BoundaryFunction{fft::inverse(c.values()), circle_radius, false};
}

BoundaryFunction resample(const BoundaryFunction& f, std::size_t N_new) {
  require_power_of_two(N_new);
  const auto c = analyze(f);
  auto out = FourierCoefficients::zeros(N_new);
  for (int k = c.min_frequency(); k <= c.max_frequency(); ++k) {
    if (k >= out.min_frequency() && k <= out.max_frequency()) out.set(k, c.at(k));
  }
  auto g = synthesize(out, f.circle_radius);
  g.on_curve = f.on_curve;
  return g;
}

BoundaryFunction sample_circle(std::size_t N, const std::function<cplx(cplx)>& f) {
  require_power_of_two(N);
  BoundaryFunction g{std::vector<cplx>(N), 1.0, false};
  for (std::size_t j = 0; j < N; ++j)
    g.samples[j] = f(std::polar(1.0, kTwoPi * static_cast<double>(j) / static_cast<double>(N)));
  return g;
}

double l2_norm_circle(const BoundaryFunction& f) {
  std::vector<double> sq(f.N());
  for (std::size_t j = 0; j < f.N(); ++j) sq[j] = std::norm(f.samples[j]);
  return std::sqrt(pairwise_sum(sq) / static_cast<double>(f.N()));
}

double l2_norm_curve(const BoundaryFunction& f, const AnalyticDomain& dom) {
  const auto nodes = boundary_nodes(dom, f.N());
  std::vector<double> terms(f.N());
  for (std::size_t j = 0; j < f.N(); ++j) terms[j] = std::norm(f.samples[j]) * std::abs(nodes[j].weight);
  return std::sqrt(pairwise_sum(terms) / kTwoPi);
}

double hardy_norm(const HardyFunction& f) {
  std::vector<double> sq(f.taylor.size());
  for (std::size_t k = 0; k < sq.size(); ++k) sq[k] = std::norm(f.taylor[k]);
  return std::sqrt(pairwise_sum(sq));
}

HardyFunction riesz_projection(const BoundaryFunction& f) {
  const auto c = analyze(f);
  HardyFunction h;
  h.taylor.resize(static_cast<std::size_t>(c.max_frequency()) + 1);
  const double rho = f.circle_radius;
  for (int k = 0; k <= c.max_frequency(); ++k) h.taylor[k] = c.at(k) / std::pow(rho, k);
  return h;
}

BoundaryFunction monomial_multiply(const BoundaryFunction& f, int n) {
  BoundaryFunction g = f;
  const double N = static_cast<double>(f.N());
  const double scale = std::pow(f.circle_radius, n);
  for (std::size_t j = 0; j < f.N(); ++j) {
    // exact phase: reduce the index product modulo N before scaling
    const auto phase = static_cast<double>((static_cast<long long>(j) * n) %
                                           static_cast<long long>(f.N()));
    g.samples[j] *= scale * std::polar(1.0, kTwoPi * phase / N);
  }
  return g;
}

HardyFunction monomial_multiply(const HardyFunction& f, std::size_t m) {
  HardyFunction g;
  g.taylor.assign(m, cplx{});
  g.taylor.insert(g.taylor.end(), f.taylor.begin(), f.taylor.end());
  return g;
}

}  // namespace cauchy
