#include "cauchy/analytic_domain.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <sstream>

#include "cauchy/fft.hpp"
#include "cauchy/numeric.hpp"

namespace cauchy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct CircleEvidence {
  double min_pairwise_distance = kInf;
  int winding_number = 0;
  bool self_intersection = false;
};

double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }

int orientation(cplx p, cplx q, cplx r) {
  const double v = cross(q - p, r - p);
  return (v > 0) - (v < 0);
}

bool segments_cross(cplx a, cplx b, cplx c, cplx d) {
  // Bounding boxes first; proper crossings only (touching counts as clean).
  if (std::max(a.real(), b.real()) < std::min(c.real(), d.real()) ||
      std::max(c.real(), d.real()) < std::min(a.real(), b.real()) ||
      std::max(a.imag(), b.imag()) < std::min(c.imag(), d.imag()) ||
      std::max(c.imag(), d.imag()) < std::min(a.imag(), b.imag())) {
    return false;
  }
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

CircleEvidence circle_evidence(const PowerSeries& psi, double rho, std::size_t n,
                               bool want_distance) {
  std::vector<cplx> pts(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
    pts[j] = psi(psi.center() + std::polar(rho, t));
  }
  CircleEvidence ev;

  const cplx anchor = psi(psi.center());
  double turned = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const cplx a = pts[j] - anchor;
    const cplx b = pts[(j + 1) % n] - anchor;
    turned += std::arg(b / a);
  }
  ev.winding_number = static_cast<int>(std::lround(turned / kTwoPi));

  if (want_distance) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        ev.min_pairwise_distance = std::min(ev.min_pairwise_distance, std::abs(pts[i] - pts[j]));
  }

  for (std::size_t i = 0; i < n && !ev.self_intersection; ++i) {
    const cplx a = pts[i];
    const cplx b = pts[(i + 1) % n];
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the wrap
      if (segments_cross(a, b, pts[j], pts[(j + 1) % n])) {
        ev.self_intersection = true;
        break;
      }
    }
  }
  return ev;
}

std::vector<cplx> polynomial_roots(std::vector<cplx> c) {
  double scale = 0.0;
  for (const auto& x : c) scale = std::max(scale, std::abs(x));
  while (c.size() > 1 && std::abs(c.back()) <= 1e-14 * scale) c.pop_back();
  const std::size_t deg = c.size() - 1;
  if (deg == 0) return {};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (std::size_t i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < deg; ++i) companion(i, deg - 1) = -c[i] / c[deg];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  const auto& ev = solver.eigenvalues();
  std::vector<cplx> roots(ev.data(), ev.data() + ev.size());
  std::sort(roots.begin(), roots.end(),
            [](cplx a, cplx b) { return std::abs(a) < std::abs(b); });
  return roots;
}

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

}  // namespace

RadiiPair RadiiPair::checked(double r, double s, double R) {
  if (!(1.0 < r && r < s && s < R)) {
    throw Error(ErrorKind::RadiiError, "need 1 < r < s < R, got r=" + format_double(r) +
                                           " s=" + format_double(s) + " R=" + format_double(R));
  }
  return RadiiPair{r, s};
}

RadiiPair RadiiPair::defaults(double R) {
  return checked(std::cbrt(R), std::cbrt(R * R), R);
}

std::vector<cplx> derivative_roots(const PowerSeries& psi) {
  if (psi.order() == 0) return {};
  const auto d = ps_derivative(psi);
  auto roots = polynomial_roots({d.coeffs().begin(), d.coeffs().end()});
  for (auto& z : roots) z += psi.center();
  return roots;
}

ValidationReport inspect_conformal(const PowerSeries& psi, double R_check, std::size_t samples) {
  ValidationReport rep;
  rep.R_check = R_check;
  rep.samples = samples;
  if (psi.order() == 0) {
    rep.failure = ErrorKind::NotConformal;
    rep.message = "constant map";
    return rep;
  }
  const auto dpsi = ps_derivative(psi);

  rep.derivative_roots = derivative_roots(psi);
  rep.min_root_modulus = kInf;
  for (const auto& z : rep.derivative_roots)
    rep.min_root_modulus = std::min(rep.min_root_modulus, std::abs(z - psi.center()));

  // Dense polar grid over the closed disc.
  constexpr int kRadial = 64;
  constexpr int kAngular = 256;
  rep.min_abs_derivative = std::abs(dpsi(psi.center()));
  for (int i = 1; i <= kRadial; ++i) {
    const double rho = R_check * i / kRadial;
    for (int j = 0; j < kAngular; ++j) {
      const cplx z = psi.center() + std::polar(rho, kTwoPi * j / kAngular);
      rep.min_abs_derivative = std::min(rep.min_abs_derivative, std::abs(dpsi(z)));
    }
  }
  bool all_zero = true;
  for (const auto& c : dpsi.coeffs()) all_zero = all_zero && c == cplx{};
  if (all_zero) {
    rep.failure = ErrorKind::NotConformal;
    rep.message = "psi' vanishes identically";
    return rep;
  }
  if (rep.min_root_modulus <= R_check) {
    rep.failure = ErrorKind::NotConformal;
    rep.message = "psi' has a root of modulus " + format_double(rep.min_root_modulus) +
                  " inside |z| <= " + format_double(R_check);
    return rep;
  }

  const auto ev = circle_evidence(psi, R_check, samples, true);
  rep.min_pairwise_distance = ev.min_pairwise_distance;
  rep.winding_number = ev.winding_number;
  rep.self_intersection = ev.self_intersection;
  if (ev.self_intersection || ev.winding_number != 1) {
    rep.failure = ErrorKind::NotInjective;
    rep.message = "boundary image on |z| = " + format_double(R_check) +
                  (ev.self_intersection ? " self-intersects" : " has winding number " +
                                                                   std::to_string(ev.winding_number));
  }
  return rep;
}

ValidationReport validate_conformal(const PowerSeries& psi, double R_check) {
  if (!(R_check > 1.0)) throw Error(ErrorKind::BoundaryNotAnalytic, "R_check must exceed 1");
  auto rep = inspect_conformal(psi, R_check);
  if (!rep.valid()) throw Error(*rep.failure, rep.message);
  return rep;
}

bool injective_on_circle(const PowerSeries& psi, double rho, std::size_t n) {
  const auto ev = circle_evidence(psi, rho, n, false);
  return !ev.self_intersection && ev.winding_number == 1;
}

double estimate_R(const PowerSeries& psi) {
  if (psi.order() == 0) throw Error(ErrorKind::BoundaryNotAnalytic, "constant map");
  double root_radius = kInf;
  for (const auto& z : derivative_roots(psi))
    root_radius = std::min(root_radius, std::abs(z - psi.center()));

  const double search_cap = kRadiusCap / kRadiusSafety;
  const double upper = std::min(root_radius, search_cap);
  double rho = upper;
  if (!injective_on_circle(psi, upper)) {
    if (upper <= 1.0 || !injective_on_circle(psi, 1.0)) {
      throw Error(ErrorKind::BoundaryNotAnalytic, "map is not injective on the unit circle");
    }
    double lo = 1.0;
    double hi = upper;
    for (int it = 0; it < 40 && hi - lo > 1e-9 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      (injective_on_circle(psi, mid) ? lo : hi) = mid;
    }
    rho = lo;
  }
  const double R = rho >= search_cap ? kRadiusCap : kRadiusSafety * rho;
  if (R <= 1.0) {
    throw Error(ErrorKind::BoundaryNotAnalytic,
                "no conformal extension past the unit circle (R estimate " + format_double(R) + ")");
  }
  return std::max(R, 1.0 + 1e-6);
}

AnalyticDomain::AnalyticDomain(std::string name, PowerSeries psi, double R)
    : name_(std::move(name)),
      psi_(std::move(psi)),
      psi_prime_(ps_derivative(psi_)),
      half_derivative_(ps_sqrt_branch(psi_prime_, kDefaultOrder)),
      R_(R) {
  constexpr std::size_t kDiameterSamples = 512;
  std::vector<cplx> pts(kDiameterSamples);
  for (std::size_t j = 0; j < kDiameterSamples; ++j)
    pts[j] = psi_(std::polar(1.0, kTwoPi * static_cast<double>(j) / kDiameterSamples));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      diameter_ = std::max(diameter_, std::abs(pts[i] - pts[j]));
}

AnalyticDomain AnalyticDomain::from_map(std::string name, PowerSeries psi,
                                        std::optional<double> R) {
  if (psi.center() != cplx{}) psi = ps_recenter(psi, 0.0, psi.order());
  if (psi.order() == 0) throw Error(ErrorKind::NotConformal, "constant map");
  const double radius = R ? *R : estimate_R(psi);
  if (!(radius > 1.0)) throw Error(ErrorKind::BoundaryNotAnalytic, "R must exceed 1");
  validate_conformal(psi, radius);
  return AnalyticDomain(std::move(name), std::move(psi), radius);
}

cplx AnalyticDomain::sqrt_derivative(cplx z) const {
  cplx prev = std::sqrt(psi_prime_(0.0));
  const int steps = std::max(8, static_cast<int>(std::ceil(16.0 * std::abs(z))));
  for (int k = 1; k <= steps; ++k) {
    const cplx root = std::sqrt(psi_prime_(z * (static_cast<double>(k) / steps)));
    prev = std::norm(root - prev) <= std::norm(root + prev) ? root : -root;
  }
  return prev;
}

AnalyticDomain preset_domain(const std::string& name) {
  auto parse_eps = [&](const std::string& prefix, double fallback) {
    if (name == prefix) return fallback;
    const std::string tail = name.substr(prefix.size() + 1);
    std::size_t used = 0;
    double eps = 0.0;
    try {
      eps = std::stod(tail, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tail.size()) throw Error(ErrorKind::ConfigError, "bad preset parameter: " + name);
    return eps;
  };
  auto starts = [&](const std::string& prefix) {
    return name == prefix || name.rfind(prefix + "-", 0) == 0;
  };

  if (name == "disk") return AnalyticDomain::from_map(name, PowerSeries({0.0, 1.0}));
  if (starts("perturbed-disk")) {
    const double eps = parse_eps("perturbed-disk", 0.2);
    if (!(eps > 0.0 && eps < 0.5))
      throw Error(ErrorKind::ConfigError, "perturbed-disk needs eps in (0, 0.5)");
    return AnalyticDomain::from_map(name, PowerSeries({0.0, 1.0, eps}));
  }
  if (starts("cubic-blob")) {
    const double eps = parse_eps("cubic-blob", 0.1);
    if (!(eps > 0.0)) throw Error(ErrorKind::ConfigError, "cubic-blob needs eps > 0");
    return AnalyticDomain::from_map(name, PowerSeries({0.0, 1.0, 0.0, eps}));
  }
  throw Error(ErrorKind::ConfigError, "unknown preset: " + name);
}

std::uint64_t domain_fingerprint(const AnalyticDomain& dom) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](double x) {
    unsigned char bytes[sizeof(double)];
    std::memcpy(bytes, &x, sizeof(double));
    for (unsigned char b : bytes) {
      h ^= b;
      h *= 1099511628211ULL;
    }
  };
  for (const auto& c : dom.psi().coeffs()) {
    mix(c.real());
    mix(c.imag());
  }
  mix(dom.R());
  return h;
}

std::vector<std::string> preset_names() { return {"disk", "perturbed-disk", "cubic-blob"}; }

cplx invert_map(const AnalyticDomain& dom, cplx w, double tol) {
  constexpr int kMaxIter = 100;
  constexpr double kOvershoot = 1.5;
  const auto& psi = dom.psi();
  cplx z = (w - psi(0.0)) / dom.derivative(0.0);
  bool converged = false;
  for (int it = 0; it <= kMaxIter && !converged; ++it) {
    const cplx residual = psi(z) - w;
    if (std::abs(residual) <= tol) {
      converged = true;
      break;
    }
    if (it == kMaxIter) break;
    const cplx d = dom.derivative(z);
    if (d == cplx{}) throw Error(ErrorKind::InversionDiverged, "psi' vanished during Newton");
    cplx step = residual / d;
    for (int h = 0; h < 60 && std::abs(z - step) > kOvershoot; ++h) step *= 0.5;
    z -= step;
    // Rounding floor: the step has stalled and the residual is at noise level.
    converged = std::abs(step) <= 1e-16 * (1.0 + std::abs(z)) && std::abs(psi(z) - w) <= 1e-12;
  }
  if (!converged) {
    throw Error(ErrorKind::InversionDiverged, "Newton did not converge in 100 iterations");
  }
  if (std::abs(z) >= 1.0 + 1e-9) {
    throw Error(ErrorKind::InversionDiverged, "preimage lies outside the unit disc");
  }
  return z;
}

std::vector<BoundaryNode> boundary_nodes(const AnalyticDomain& dom, std::size_t N) {
  if (!fft::is_power_of_two(N) || N < 4) {
    throw Error(ErrorKind::SizeError, "node count must be a power of two >= 4");
  }
  std::vector<BoundaryNode> nodes(N);
  const double h = kTwoPi / static_cast<double>(N);
  for (std::size_t j = 0; j < N; ++j) {
    const double t = h * static_cast<double>(j);
    const cplx e = std::polar(1.0, t);
    nodes[j] = {t, dom.map(e), dom.derivative(e) * kI * e * h};
  }
  return nodes;
}

}  // namespace cauchy
