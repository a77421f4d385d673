#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cauchy/analytic_domain.hpp"
#include "cauchy/boundary_functions.hpp"
#include "cauchy/kernel_expansion.hpp"

namespace cauchy {

/// A = sum_{m,n <= M} a_mn M_m C_Delta N_n, the series form of
/// U_psi C_D U~_phi acting from L^2 of the unit circle into H^2.
class SeriesOperator {
 public:
  /// Throws ConfigError if the expansion was extracted from another domain
  /// or M exceeds the expansion's truncation.
  SeriesOperator(AnalyticDomain domain, KernelExpansion expansion,
                 std::optional<std::size_t> M = std::nullopt);

  /// Default radii and automatic truncation.
  static SeriesOperator build(const AnalyticDomain& domain);

  const AnalyticDomain& domain() const { return domain_; }
  const KernelExpansion& expansion() const { return expansion_; }
  std::size_t M() const { return M_; }

 private:
  AnalyticDomain domain_;
  KernelExpansion expansion_;
  std::size_t M_;
};

/// A f = sum a_mn M_m p_n with p_n = C_Delta N_n f computed once per n. f is
/// zero-padded first so the shifted spectra do not wrap.
HardyFunction apply_series_operator(const SeriesOperator& op, const BoundaryFunction& f);

/// abs_sum + tail_sum_bound at the operator's truncation.
double operator_norm_upper(const SeriesOperator& op);

/// max over trials of ||A f||_{H^2} / ||f||_{L^2} for random band-limited f
/// (complex Gaussian Fourier coefficients, flat up to degree N/4). Even
/// trials draw analytic inputs, odd trials the full band. Deterministic in seed.
double operator_norm_lower_mc(const SeriesOperator& op, std::size_t trials, std::uint64_t seed,
                              std::size_t N = 256);

struct ConvergenceStep {
  std::size_t M;
  /// ||A_M f - A_{M_max} f||_{H^2}
  double deviation;
  /// tail_sum_bound(M) * ||f||
  double bound;
};

/// Partial sums A_M f against the operator's own truncation.
std::vector<ConvergenceStep> partial_sum_convergence(const SeriesOperator& op,
                                                     const BoundaryFunction& f,
                                                     std::span<const std::size_t> schedule);

/// Max over probes of |(A f)(z) - direct_conjugated_operator(f, z)| with the
/// direct quadrature on N_quad nodes.
double equivalence_check(const SeriesOperator& op, const BoundaryFunction& f,
                         std::span<const cplx> probes, std::size_t N_quad);

/// Random trigonometric polynomial sum_{k=-degree}^{degree} c_k e^{ik theta}
/// with complex Gaussian c_k; negative frequencies dropped when analytic_only.
FourierCoefficients random_trig_polynomial(std::size_t N, int degree, std::uint64_t seed,
                                           bool analytic_only = false);

}  // namespace cauchy
