#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cauchy/error.hpp"
#include "cauchy/power_series.hpp"

namespace cauchy {

/// Radii of the two extraction circles, 1 < r < s < R.
struct RadiiPair {
  double r;
  double s;

  /// Throws RadiiError unless 1 < r < s < R.
  static RadiiPair checked(double r, double s, double R);
  /// Geometric spacing inside (1, R): r = R^{1/3}, s = R^{2/3}.
  static RadiiPair defaults(double R);
};

struct ValidationReport {
  double R_check = 0.0;
  /// Sampled minimum of |psi'| over the closed disc |z| <= R_check.
  double min_abs_derivative = 0.0;
  /// Roots of psi' (psi is a polynomial) and the smallest root modulus
  /// (infinity when psi' is a nonzero constant).
  std::vector<cplx> derivative_roots;
  double min_root_modulus = 0.0;
  std::size_t samples = 0;
  double min_pairwise_distance = 0.0;
  int winding_number = 0;
  bool self_intersection = false;
  /// Empty when psi passed every check.
  std::optional<ErrorKind> failure;
  std::string message;

  bool valid() const { return !failure.has_value(); }
};

inline constexpr std::size_t kInjectivitySamples = 2048;
inline constexpr double kRadiusCap = 4.0;
inline constexpr double kRadiusSafety = 0.95;

/// Gathers conformality and injectivity evidence on |z| <= R_check without
/// throwing; the failure field says which check broke.
ValidationReport inspect_conformal(const PowerSeries& psi, double R_check,
                                   std::size_t samples = kInjectivitySamples);

/// Same evidence as inspect_conformal; throws NotConformal or NotInjective.
ValidationReport validate_conformal(const PowerSeries& psi, double R_check);

/// 0.95 x min(smallest |root of psi'|, largest injective sampling radius),
/// capped at 4. Throws BoundaryNotAnalytic when no R > 1 survives.
double estimate_R(const PowerSeries& psi);

/// Roots of psi' (companion-matrix eigenvalues).
std::vector<cplx> derivative_roots(const PowerSeries& psi);

/// True when theta -> psi(rho e^{i theta}) sampled at n points is a simple
/// closed polygon winding once around psi(center).
bool injective_on_circle(const PowerSeries& psi, double rho, std::size_t n = kInjectivitySamples);

/// D = psi(unit disc) for a polynomial map psi that is analytic and
/// conformal on the disc of radius R > 1. Immutable after construction.
class AnalyticDomain {
 public:
  /// Validates psi on |z| <= R; a missing R is estimated.
  static AnalyticDomain from_map(std::string name, PowerSeries psi,
                                 std::optional<double> R = std::nullopt);

  const std::string& name() const { return name_; }
  const PowerSeries& psi() const { return psi_; }
  const PowerSeries& psi_prime() const { return psi_prime_; }
  /// psi'^{1/2} as a series anchored at 0 with the principal root of psi'(0).
  const PowerSeries& half_derivative() const { return half_derivative_; }
  double R() const { return R_; }
  /// Sampled diameter of the boundary curve.
  double diameter() const { return diameter_; }

  cplx map(cplx z) const { return psi_(z); }
  cplx derivative(cplx z) const { return psi_prime_(z); }
  /// psi'(z)^{1/2} on the branch of half_derivative(), obtained by continuing
  /// the principal root along the ray from 0 to z. Unlike the truncated
  /// series this stays accurate all the way out to |z| = R.
  cplx sqrt_derivative(cplx z) const;

 private:
  AnalyticDomain(std::string name, PowerSeries psi, double R);

  std::string name_;
  PowerSeries psi_;
  PowerSeries psi_prime_;
  PowerSeries half_derivative_;
  double R_;
  double diameter_ = 0.0;
};

/// FNV-1a hash of psi's coefficients and R; ties derived objects to the
/// domain they came from.
std::uint64_t domain_fingerprint(const AnalyticDomain& dom);

/// Shipped presets: "disk" (psi = z), "perturbed-disk[-eps]" (z + eps z^2,
/// eps in (0, 0.5), default 0.2), "cubic-blob[-eps]" (z + eps z^3, default 0.1).
AnalyticDomain preset_domain(const std::string& name);
std::vector<std::string> preset_names();

/// phi = psi^{-1}: Newton iteration with step halving whenever an iterate
/// leaves |z| <= 1.5. Throws InversionDiverged after 100 iterations or when
/// the preimage is outside the closed unit disc.
cplx invert_map(const AnalyticDomain& dom, cplx w, double tol = 1e-14);

struct BoundaryNode {
  double theta;
  cplx zeta;
  cplx weight;
};

/// Trapezoidal nodes on dD: zeta_j = psi(e^{i theta_j}) with the exact
/// d zeta element psi'(e^{i theta}) i e^{i theta} (2 pi / N).
std::vector<BoundaryNode> boundary_nodes(const AnalyticDomain& dom, std::size_t N);

}  // namespace cauchy
