#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace cauchy {

using cplx = std::complex<double>;

inline constexpr std::size_t kDefaultOrder = 64;

/// Truncated power series sum_k c_k (z - center)^k.
///
/// Binary arithmetic truncates to the smaller of the two orders. Operations
/// that build a series from a recurrence (div, log, exp, sqrt) accept an
/// explicit output order; shorter inputs are treated as zero-padded.
/// Coefficients with magnitude below 1e-300 are flushed to zero.
class PowerSeries {
 public:
  explicit PowerSeries(std::vector<cplx> coeffs, cplx center = 0.0);

  std::span<const cplx> coeffs() const { return coeffs_; }
  const cplx& operator[](std::size_t k) const { return coeffs_[k]; }
  /// Coefficient k, or zero past the truncation order.
  cplx coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : cplx{}; }
  cplx center() const { return center_; }
  std::size_t order() const { return coeffs_.size() - 1; }

  /// Horner evaluation at z (absolute coordinate, not offset from center).
  cplx operator()(cplx z) const;

 private:
  std::vector<cplx> coeffs_;
  cplx center_;
};

cplx ps_eval(const PowerSeries& s, cplx z);

PowerSeries ps_derivative(const PowerSeries& s);
PowerSeries ps_integrate(const PowerSeries& s);

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_scale(const PowerSeries& a, cplx factor);
PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_div(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_div(const PowerSeries& a, const PowerSeries& b, std::size_t order);

/// exp(s) via the recurrence e' = s' e.
PowerSeries ps_exp(const PowerSeries& s);
PowerSeries ps_exp(const PowerSeries& s, std::size_t order);

/// Logarithm anchored at the center: L(center) = Log(s(center)) (principal),
/// L' = s'/s. Valid on any disc about the center where s has no zeros.
PowerSeries ps_log_branch(const PowerSeries& s);
PowerSeries ps_log_branch(const PowerSeries& s, std::size_t order);

/// exp(log(s)/2) with the same anchoring as ps_log_branch.
PowerSeries ps_sqrt_branch(const PowerSeries& s);
PowerSeries ps_sqrt_branch(const PowerSeries& s, std::size_t order);

/// Taylor coefficients of the same truncated polynomial about z0. Exact for
/// polynomials when new_order >= order.
PowerSeries ps_recenter(const PowerSeries& s, cplx z0, std::size_t new_order);

}  // namespace cauchy
