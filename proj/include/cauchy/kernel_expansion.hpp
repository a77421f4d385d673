#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cauchy/analytic_domain.hpp"

namespace cauchy {

/// Below this |w - z| the kernel quotient is evaluated from the Taylor
/// expansion of psi about z.
inline constexpr double kDiagonalSwitch = 1e-3;
inline constexpr std::size_t kDiagonalOrder = 8;
/// Slack allowed on top of the coefficient bound.
inline constexpr double kCoefficientTolerance = 1e-9;
inline constexpr std::size_t kMaxTruncation = 64;
inline constexpr double kAutoTailRatio = 1e-10;

/// Coefficients a_mn of H(z, w) = sum a_mn z^m w^n for m, n <= M.
struct KernelExpansion {
  std::vector<cplx> a;  // row-major, (M+1) x (M+1), a[m*(M+1)+n]
  std::size_t M = 0;
  RadiiPair radii{};
  double sup_H = 0.0;
  double abs_sum = 0.0;
  double tail_bound = 0.0;
  std::size_t grid_N = 0;
  /// Set when grid_N < 4M; aliased mass may exceed the coefficient tolerance.
  bool alias_risk = false;
  /// domain_fingerprint of the domain the table was extracted from.
  std::uint64_t domain_hash = 0;

  cplx at(std::size_t m, std::size_t n) const { return a[m * (M + 1) + n]; }
  /// The leading (M'+1) x (M'+1) block with abs_sum and tail_bound recomputed.
  KernelExpansion truncated(std::size_t M_new) const;
  /// sum_{m,n <= M} a_mn z^m w^n
  cplx evaluate(cplx z, cplx w) const;
};

/// H(z, w) = (w - z) psi'(w)^{1/2} psi'(z)^{1/2} / (psi(w) - psi(z)), with the
/// removable singularity on the diagonal filled in. Throws KernelSingular if
/// psi(w) = psi(z) for w != z.
cplx kernel_eval(const AnalyticDomain& dom, cplx z, cplx w);

/// max |H| over sigma_s x sigma_r: the largest value on the grid_N x grid_N
/// sample grid, refined by a local search around the best cells. Not a
/// certified supremum.
double sup_norm_H(const AnalyticDomain& dom, const RadiiPair& radii, std::size_t grid_N);

/// s^2 sup_H r^{-(m+1)} r^{-(n+1)}
double coefficient_bound(double sup_H, const RadiiPair& radii, std::size_t m, std::size_t n);

/// s^2 sup_H sum over (m,n) outside [0,M]^2 of r^{-(m+n+2)}, in closed form.
double tail_sum_bound(double sup_H, const RadiiPair& radii, std::size_t M);

/// sum_{m,n <= M} |a_mn|
double abs_sum(const KernelExpansion& e);

/// Samples H on sigma_s x sigma_r and reads a_mn off the 2-D discrete
/// Fourier transform, rescaled by s^m r^n. Throws RadiiError for a broken
/// radii chain and SizeError unless grid_N is a power of two > M.
KernelExpansion kernel_coefficients(const AnalyticDomain& dom, const RadiiPair& radii,
                                    std::size_t M, std::size_t grid_N);

/// max(256, 4(M+1)) rounded up to a power of two.
std::size_t default_grid_size(std::size_t M);

/// Smallest M with tail_sum_bound(M) <= 1e-10 * abs_sum(M), capped at 64,
/// extracted on default_grid_size(M).
KernelExpansion kernel_coefficients_auto(const AnalyticDomain& dom, const RadiiPair& radii);

}  // namespace cauchy
