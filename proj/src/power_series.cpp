#include "cauchy/power_series.hpp"

#include <algorithm>
#include <cmath>

#include "cauchy/error.hpp"

namespace cauchy {

namespace {

constexpr double kFlushBelow = 1e-300;

void flush_tiny(std::vector<cplx>& c) {
  for (auto& x : c) {
    if (std::abs(x.real()) < kFlushBelow) x.real(0.0);
    if (std::abs(x.imag()) < kFlushBelow) x.imag(0.0);
  }
}

std::vector<cplx> padded(const PowerSeries& s, std::size_t order) {
  std::vector<cplx> c(order + 1);
  for (std::size_t k = 0; k <= order; ++k) c[k] = s.coeff(k);
  return c;
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegreeTooLow: return "DegreeTooLow";
    case ErrorKind::DivisionBySingularSeries: return "DivisionBySingularSeries";
    case ErrorKind::LogOfVanishingSeries: return "LogOfVanishingSeries";
    case ErrorKind::NotConformal: return "NotConformal";
    case ErrorKind::NotInjective: return "NotInjective";
    case ErrorKind::BoundaryNotAnalytic: return "BoundaryNotAnalytic";
    case ErrorKind::InversionDiverged: return "InversionDiverged";
    case ErrorKind::SizeError: return "SizeError";
    case ErrorKind::NearBoundary: return "NearBoundary";
    case ErrorKind::KernelSingular: return "KernelSingular";
    case ErrorKind::RadiiError: return "RadiiError";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

PowerSeries::PowerSeries(std::vector<cplx> coeffs, cplx center)
    : coeffs_(std::move(coeffs)), center_(center) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  flush_tiny(coeffs_);
}

cplx PowerSeries::operator()(cplx z) const {
  const cplx h = z - center_;
  cplx acc = coeffs_.back();
  for (std::size_t k = coeffs_.size() - 1; k-- > 0;) acc = acc * h + coeffs_[k];
  return acc;
}

cplx ps_eval(const PowerSeries& s, cplx z) { return s(z); }

PowerSeries ps_derivative(const PowerSeries& s) {
  if (s.order() == 0) throw Error(ErrorKind::DegreeTooLow, "derivative of an order-0 series");
  std::vector<cplx> d(s.order());
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = static_cast<double>(k + 1) * s[k + 1];
  return PowerSeries(std::move(d), s.center());
}

PowerSeries ps_integrate(const PowerSeries& s) {
  std::vector<cplx> c(s.order() + 2);
  for (std::size_t k = 0; k <= s.order(); ++k) c[k + 1] = s[k] / static_cast<double>(k + 1);
  return PowerSeries(std::move(c), s.center());
}

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<cplx> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = a[k] + b[k];
  return PowerSeries(std::move(c), a.center());
}

PowerSeries ps_scale(const PowerSeries& a, cplx factor) {
  std::vector<cplx> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x *= factor;
  return PowerSeries(std::move(c), a.center());
}

PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<cplx> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    cplx acc = 0.0;
    for (std::size_t j = 0; j <= k; ++j) acc += a[j] * b[k - j];
    c[k] = acc;
  }
  return PowerSeries(std::move(c), a.center());
}

PowerSeries ps_div(const PowerSeries& a, const PowerSeries& b) {
  return ps_div(a, b, std::min(a.order(), b.order()));
}

PowerSeries ps_div(const PowerSeries& a, const PowerSeries& b, std::size_t order) {
  if (b[0] == cplx{}) {
    throw Error(ErrorKind::DivisionBySingularSeries, "divisor has zero constant term");
  }
  const auto num = padded(a, order);
  const auto den = padded(b, order);
  std::vector<cplx> q(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    cplx acc = num[k];
    for (std::size_t j = 1; j <= k; ++j) acc -= den[j] * q[k - j];
    q[k] = acc / den[0];
  }
  return PowerSeries(std::move(q), a.center());
}

PowerSeries ps_exp(const PowerSeries& s) { return ps_exp(s, s.order()); }

PowerSeries ps_exp(const PowerSeries& s, std::size_t order) {
  const auto c = padded(s, order);
  std::vector<cplx> e(order + 1);
  e[0] = std::exp(c[0]);
  // k e_k = sum_{j=1}^{k} j c_j e_{k-j}
  for (std::size_t k = 1; k <= order; ++k) {
    cplx acc = 0.0;
    for (std::size_t j = 1; j <= k; ++j) acc += static_cast<double>(j) * c[j] * e[k - j];
    e[k] = acc / static_cast<double>(k);
  }
  return PowerSeries(std::move(e), s.center());
}

PowerSeries ps_log_branch(const PowerSeries& s) { return ps_log_branch(s, s.order()); }

PowerSeries ps_log_branch(const PowerSeries& s, std::size_t order) {
  if (s[0] == cplx{}) throw Error(ErrorKind::LogOfVanishingSeries, "zero constant term");
  const auto c = padded(s, order);
  std::vector<cplx> l(order + 1);
  l[0] = std::log(c[0]);
  // From s L' = s': k c_0 L_k = k c_k - sum_{j=1}^{k-1} j L_j c_{k-j}
  for (std::size_t k = 1; k <= order; ++k) {
    cplx acc = static_cast<double>(k) * c[k];
    for (std::size_t j = 1; j < k; ++j) acc -= static_cast<double>(j) * l[j] * c[k - j];
    l[k] = acc / (static_cast<double>(k) * c[0]);
  }
  return PowerSeries(std::move(l), s.center());
}

PowerSeries ps_sqrt_branch(const PowerSeries& s) { return ps_sqrt_branch(s, s.order()); }

PowerSeries ps_sqrt_branch(const PowerSeries& s, std::size_t order) {
  return ps_exp(ps_scale(ps_log_branch(s, order), 0.5), order);
}

PowerSeries ps_recenter(const PowerSeries& s, cplx z0, std::size_t new_order) {
  // Repeated synthetic division by (z - z0) shifts the expansion point.
  std::vector<cplx> c(s.coeffs().begin(), s.coeffs().end());
  const cplx h = z0 - s.center();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t k = n - 1; k-- > i;) c[k] += h * c[k + 1];
  }
  c.resize(new_order + 1);
  return PowerSeries(std::move(c), z0);
}

}  // namespace cauchy
