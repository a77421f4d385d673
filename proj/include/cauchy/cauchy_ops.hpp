#pragma once

#include <functional>
#include <span>
#include <vector>

#include "cauchy/analytic_domain.hpp"
#include "cauchy/boundary_functions.hpp"

namespace cauchy {

/// Points strictly inside a domain and the values computed there.
struct InteriorEvaluation {
  std::vector<cplx> points;
  std::vector<cplx> values;
};

enum class Direction { ToDisk, ToCurve };

/// Exclusion zone around dD, as a fraction of the domain diameter.
inline constexpr double kNearBoundaryFraction = 0.05;

/// Samples f(zeta_j) at the boundary nodes of dom.
BoundaryFunction sample_curve(const AnalyticDomain& dom, std::size_t N,
                              const std::function<cplx(cplx)>& f);

/// (1/2 pi i) sum_j f(zeta_j) weight_j / (zeta_j - z). Throws NearBoundary when
/// z lies within kNearBoundaryFraction * diameter of the sampled boundary.
/// Points outside D are not detected.
cplx cauchy_transform_domain(const AnalyticDomain& dom, const BoundaryFunction& f, cplx z);
InteriorEvaluation cauchy_transform_domain(const AnalyticDomain& dom, const BoundaryFunction& f,
                                           std::span<const cplx> points);

/// ToDisk: g(e^{i theta_j}) = f(psi(e^{i theta_j})) psi'(e^{i theta_j})^{1/2}.
/// ToCurve: the inverse map, using phi'(zeta)^{1/2} = 1 / psi'(phi(zeta))^{1/2}
/// on the same branch, so ToCurve after ToDisk is the identity.
BoundaryFunction transplant_boundary(const AnalyticDomain& dom, const BoundaryFunction& f,
                                     Direction direction);

/// (U_phi g)(z) = g(phi(z)) phi'(z)^{1/2} for z in D.
cplx transplant_interior(const AnalyticDomain& dom, const HardyFunction& g, cplx z);

/// Max |C_D(trace of U_phi g)(psi(p)) - (U_phi g)(psi(p))| over the probes.
double cauchy_representation_check(const AnalyticDomain& dom, const HardyFunction& g,
                                   std::span<const cplx> probes, std::size_t N = 256);

/// U_psi C_D U~_phi f at z in the unit disc, discretised directly on the
/// unit circle with the transplanted kernel. Requires |z| <= 0.95.
cplx direct_conjugated_operator(const AnalyticDomain& dom, const BoundaryFunction& f, cplx z);
InteriorEvaluation direct_conjugated_operator(const AnalyticDomain& dom, const BoundaryFunction& f,
                                              std::span<const cplx> points);

}  // namespace cauchy
