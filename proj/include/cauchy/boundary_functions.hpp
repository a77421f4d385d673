#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "cauchy/analytic_domain.hpp"
#include "cauchy/power_series.hpp"

namespace cauchy {

/// Samples at theta_j = 2 pi j / N, either on the circle |z| = circle_radius
/// or (on_curve) at the boundary nodes zeta_j = psi(e^{i theta_j}) of a
/// domain. N must be a power of two.
struct BoundaryFunction {
  std::vector<cplx> samples;
  double circle_radius = 1.0;
  bool on_curve = false;

  std::size_t N() const { return samples.size(); }
};

/// Discrete Fourier coefficients f_k, k = -N/2 .. N/2-1, normalized so that
/// sum |f_k|^2 equals the normalized circle L^2 norm squared.
class FourierCoefficients {
 public:
  /// values in transform order: slot j holds k = j for j < N/2, k = j - N after.
  explicit FourierCoefficients(std::vector<cplx> values);
  /// Zero-initialised band of size N.
  static FourierCoefficients zeros(std::size_t N);

  std::size_t N() const { return values_.size(); }
  int min_frequency() const { return -static_cast<int>(N() / 2); }
  int max_frequency() const { return static_cast<int>(N() / 2) - 1; }
  /// Zero for frequencies outside the band.
  cplx at(int k) const;
  void set(int k, cplx v);
  const std::vector<cplx>& values() const { return values_; }

 private:
  std::size_t slot(int k) const;
  std::vector<cplx> values_;
};

/// Element of H^2 of the unit disc, by Taylor coefficients.
struct HardyFunction {
  std::vector<cplx> taylor;

  cplx operator()(cplx z) const;
};

FourierCoefficients analyze(const BoundaryFunction& f);
BoundaryFunction synthesize(const FourierCoefficients& c, double circle_radius = 1.0);

/// Band-limited resampling: zero-pads (or truncates) the spectrum to N_new.
BoundaryFunction resample(const BoundaryFunction& f, std::size_t N_new);

/// Samples f(e^{i theta_j}) on the unit circle.
BoundaryFunction sample_circle(std::size_t N, const std::function<cplx(cplx)>& f);

/// sqrt((1/N) sum |f_j|^2).
double l2_norm_circle(const BoundaryFunction& f);
/// sqrt((1/2pi) sum |f(zeta_j)|^2 |weight_j|) using the boundary_nodes weights.
double l2_norm_curve(const BoundaryFunction& f, const AnalyticDomain& dom);
double hardy_norm(const HardyFunction& f);

/// Keeps the nonnegative frequencies; this is C_Delta f as an element of H^2.
HardyFunction riesz_projection(const BoundaryFunction& f);

/// N_n: pointwise multiplication by z^n on the sampling circle.
BoundaryFunction monomial_multiply(const BoundaryFunction& f, int n);
/// M_m: shift of the Taylor coefficients up by m.
HardyFunction monomial_multiply(const HardyFunction& f, std::size_t m);

}  // namespace cauchy
