#include "cauchy/cauchy_ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cauchy/error.hpp"
#include "cauchy/numeric.hpp"

namespace cauchy {

namespace {

void require_curve(const BoundaryFunction& f) {
  if (!f.on_curve) throw Error(ErrorKind::SizeError, "function must be sampled on the boundary curve");
}

void require_unit_circle(const BoundaryFunction& f) {
  if (f.on_curve || f.circle_radius != 1.0)
    throw Error(ErrorKind::SizeError, "function must be sampled on the unit circle");
}

cplx transform_at(const std::vector<BoundaryNode>& nodes, const BoundaryFunction& f, cplx z,
                  double min_distance) {
  double dist = std::numeric_limits<double>::infinity();
  std::vector<cplx> terms(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const cplx d = nodes[j].zeta - z;
    dist = std::min(dist, std::abs(d));
    terms[j] = f.samples[j] * nodes[j].weight / d;
  }
  if (dist < min_distance) {
    std::ostringstream os;
    os << "point (" << z.real() << ", " << z.imag() << ") is " << dist
       << " from the boundary; minimum is " << min_distance;
    throw Error(ErrorKind::NearBoundary, os.str());
  }
  return pairwise_sum(terms) / (kTwoPi * kI);
}

}  // namespace

BoundaryFunction sample_curve(const AnalyticDomain& dom, std::size_t N,
                              const std::function<cplx(cplx)>& f) {
  const auto nodes = boundary_nodes(dom, N);
  BoundaryFunction g{std::vector<cplx>(N), 1.0, true};
  for (std::size_t j = 0; j < N; ++j) g.samples[j] = f(nodes[j].zeta);
  return g;
}

cplx cauchy_transform_domain(const AnalyticDomain& dom, const BoundaryFunction& f, cplx z) {
  require_curve(f);
  return transform_at(boundary_nodes(dom, f.N()), f, z, kNearBoundaryFraction * dom.diameter());
}

InteriorEvaluation cauchy_transform_domain(const AnalyticDomain& dom, const BoundaryFunction& f,
                                           std::span<const cplx> points) {
  require_curve(f);
  const auto nodes = boundary_nodes(dom, f.N());
  const double min_distance = kNearBoundaryFraction * dom.diameter();
  InteriorEvaluation out{{points.begin(), points.end()}, std::vector<cplx>(points.size())};
  parallel_for(points.size(), [&](std::size_t i) {
    out.values[i] = transform_at(nodes, f, points[i], min_distance);
  });
  return out;
}

BoundaryFunction transplant_boundary(const AnalyticDomain& dom, const BoundaryFunction& f,
                                     Direction direction) {
  if (direction == Direction::ToDisk) {
    require_curve(f);
  } else {
    require_unit_circle(f);
  }
  BoundaryFunction g{f.samples, 1.0, direction == Direction::ToCurve};
  const double N = static_cast<double>(f.N());
  for (std::size_t j = 0; j < f.N(); ++j) {
    // node j of dD is psi(e^{i theta_j}), so phi(zeta_j) = e^{i theta_j}
    const cplx root = dom.sqrt_derivative(std::polar(1.0, kTwoPi * static_cast<double>(j) / N));
    g.samples[j] = direction == Direction::ToDisk ? f.samples[j] * root : f.samples[j] / root;
  }
  return g;
}

cplx transplant_interior(const AnalyticDomain& dom, const HardyFunction& g, cplx z) {
  const cplx u = invert_map(dom, z);
  return g(u) / dom.sqrt_derivative(u);
}

double cauchy_representation_check(const AnalyticDomain& dom, const HardyFunction& g,
                                   std::span<const cplx> probes, std::size_t N) {
  const auto on_disk = sample_circle(N, [&](cplx w) { return g(w); });
  const auto trace = transplant_boundary(dom, on_disk, Direction::ToCurve);
  std::vector<cplx> targets(probes.size());
  for (std::size_t i = 0; i < probes.size(); ++i) targets[i] = dom.map(probes[i]);
  const auto transformed = cauchy_transform_domain(dom, trace, targets);
  std::vector<double> errors(probes.size());
  parallel_for(probes.size(), [&](std::size_t i) {
    errors[i] = std::abs(transformed.values[i] - transplant_interior(dom, g, targets[i]));
  });
  return errors.empty() ? 0.0 : *std::max_element(errors.begin(), errors.end());
}

InteriorEvaluation direct_conjugated_operator(const AnalyticDomain& dom, const BoundaryFunction& f,
                                              std::span<const cplx> points) {
  require_unit_circle(f);
  for (const auto& z : points) {
    if (std::abs(z) > 0.95) throw Error(ErrorKind::NearBoundary, "direct quadrature needs |z| <= 0.95");
  }
  const std::size_t N = f.N();
  // (1/2 pi i) * i w (2 pi / N) collapses to w / N
  std::vector<cplx> numer(N);
  std::vector<cplx> image(N);
  for (std::size_t j = 0; j < N; ++j) {
    const cplx w = std::polar(1.0, kTwoPi * static_cast<double>(j) / static_cast<double>(N));
    numer[j] = f.samples[j] * dom.sqrt_derivative(w) * w;
    image[j] = dom.map(w);
  }
  InteriorEvaluation out{{points.begin(), points.end()}, std::vector<cplx>(points.size())};
  parallel_for(points.size(), [&](std::size_t i) {
    const cplx psi_z = dom.map(points[i]);
    std::vector<cplx> terms(N);
    for (std::size_t j = 0; j < N; ++j) terms[j] = numer[j] / (image[j] - psi_z);
    out.values[i] = dom.sqrt_derivative(points[i]) * pairwise_sum(terms) / static_cast<double>(N);
  });
  return out;
}

cplx direct_conjugated_operator(const AnalyticDomain& dom, const BoundaryFunction& f, cplx z) {
  const cplx pts[] = {z};
  return direct_conjugated_operator(dom, f, pts).values[0];
}

}  // namespace cauchy
