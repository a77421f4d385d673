#include "cauchy/kernel_expansion.hpp"

#include <algorithm>
#include <cmath>

#include "cauchy/error.hpp"
#include "cauchy/fft.hpp"
#include "cauchy/numeric.hpp"

namespace cauchy {

namespace {

struct CircleSamples {
  std::vector<cplx> points;
  std::vector<cplx> images;
  std::vector<cplx> roots;
};

CircleSamples sample_circle_data(const AnalyticDomain& dom, double radius, std::size_t N) {
  CircleSamples c{std::vector<cplx>(N), std::vector<cplx>(N), std::vector<cplx>(N)};
  parallel_for(N, [&](std::size_t j) {
    const cplx z = std::polar(radius, kTwoPi * static_cast<double>(j) / static_cast<double>(N));
    c.points[j] = z;
    c.images[j] = dom.map(z);
    c.roots[j] = dom.sqrt_derivative(z);
  });
  return c;
}

// H on the product grid; rows follow u in sigma_s, columns v in sigma_r.
std::vector<cplx> kernel_grid(const AnalyticDomain& dom, const RadiiPair& radii, std::size_t N) {
  const auto u = sample_circle_data(dom, radii.s, N);
  const auto v = sample_circle_data(dom, radii.r, N);
  std::vector<cplx> grid(N * N);
  parallel_for(N, [&](std::size_t j) {
    for (std::size_t k = 0; k < N; ++k) {
      const cplx diff = u.images[j] - v.images[k];
      if (diff == cplx{}) throw Error(ErrorKind::KernelSingular, "psi not injective on the grid");
      grid[j * N + k] = (u.points[j] - v.points[k]) * u.roots[j] * v.roots[k] / diff;
    }
  });
  return grid;
}

// Largest |H| on the grid, then polished by compass search in the two
// angles around the best few cells, so the value converges as the grid is
// refined instead of carrying the O(h^2) sampling error.
double refined_sup(const AnalyticDomain& dom, const RadiiPair& radii,
                   const std::vector<cplx>& grid, std::size_t N) {
  std::vector<std::size_t> order(grid.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  const std::size_t seeds = std::min<std::size_t>(4, order.size());
  std::partial_sort(order.begin(), order.begin() + seeds, order.end(), [&](auto a, auto b) {
    return std::abs(grid[a]) > std::abs(grid[b]);
  });

  auto value = [&](double tu, double tv) {
    const cplx u = std::polar(radii.s, tu);
    const cplx v = std::polar(radii.r, tv);
    return std::abs((u - v) * dom.sqrt_derivative(u) * dom.sqrt_derivative(v) / (dom.map(u) - dom.map(v)));
  };

  double best = std::abs(grid[order[0]]);
  const double h = kTwoPi / static_cast<double>(N);
  for (std::size_t k = 0; k < seeds; ++k) {
    double tu = h * static_cast<double>(order[k] / N);
    double tv = h * static_cast<double>(order[k] % N);
    double cur = value(tu, tv);
    for (double step = h; step > 1e-10;) {
      bool moved = false;
      for (const auto& [du, dv] : {std::pair{step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step}}) {
        const double trial = value(tu + du, tv + dv);
        if (trial > cur) {
          cur = trial, tu += du, tv += dv, moved = true;
          break;
        }
      }
      if (!moved) step *= 0.5;
    }
    best = std::max(best, cur);
  }
  return best;
}

double table_abs_sum(const std::vector<cplx>& a) {
  std::vector<double> mags(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mags[i] = std::abs(a[i]);
  return pairwise_sum(mags);
}

void check_grid(std::size_t M, std::size_t grid_N) {
  if (!fft::is_power_of_two(grid_N) || grid_N <= M) {
    throw Error(ErrorKind::SizeError, "grid size must be a power of two exceeding M");
  }
}

}  // namespace

KernelExpansion KernelExpansion::truncated(std::size_t M_new) const {
  if (M_new > M) throw Error(ErrorKind::SizeError, "cannot extend a truncation");
  KernelExpansion e = *this;
  e.M = M_new;
  e.a.assign((M_new + 1) * (M_new + 1), cplx{});
  for (std::size_t m = 0; m <= M_new; ++m)
    for (std::size_t n = 0; n <= M_new; ++n) e.a[m * (M_new + 1) + n] = at(m, n);
  e.abs_sum = cauchy::abs_sum(e);
  e.tail_bound = tail_sum_bound(sup_H, radii, M_new);
  return e;
}

cplx KernelExpansion::evaluate(cplx z, cplx w) const {
  cplx acc = 0.0;
  for (std::size_t m = M + 1; m-- > 0;) {
    cplx row = 0.0;
    for (std::size_t n = M + 1; n-- > 0;) row = row * w + at(m, n);
    acc = acc * z + row;
  }
  return acc;
}

cplx kernel_eval(const AnalyticDomain& dom, cplx z, cplx w) {
  const cplx h = w - z;
  cplx quotient;  // (psi(w) - psi(z)) / (w - z)
  if (std::abs(h) >= kDiagonalSwitch) {
    quotient = (dom.map(w) - dom.map(z)) / h;
  } else {
    const auto local = ps_recenter(dom.psi(), z, kDiagonalOrder + 1);
    quotient = 0.0;
    for (std::size_t k = kDiagonalOrder + 1; k >= 1; --k) quotient = quotient * h + local[k];
  }
  if (std::abs(quotient) < 1e-14) {
    throw Error(ErrorKind::KernelSingular, "psi(w) = psi(z) with w != z");
  }
  return dom.sqrt_derivative(w) * dom.sqrt_derivative(z) / quotient;
}

double sup_norm_H(const AnalyticDomain& dom, const RadiiPair& radii, std::size_t grid_N) {
  RadiiPair::checked(radii.r, radii.s, dom.R());
  check_grid(0, grid_N);
  return refined_sup(dom, radii, kernel_grid(dom, radii, grid_N), grid_N);
}

double coefficient_bound(double sup_H, const RadiiPair& radii, std::size_t m, std::size_t n) {
  return radii.s * radii.s * sup_H * std::pow(radii.r, -static_cast<double>(m + 1)) *
         std::pow(radii.r, -static_cast<double>(n + 1));
}

double tail_sum_bound(double sup_H, const RadiiPair& radii, std::size_t M) {
  // sum over the complement of [0,M]^2 of q^{m+n}, q = 1/r:
  //   (1/(1-q))^2 - ((1 - q^{M+1})/(1-q))^2 = (1 - (1 - q^{M+1})^2) / (1-q)^2
  const double q = 1.0 / radii.r;
  const double qm = std::pow(q, static_cast<double>(M + 1));
  const double complement = qm * (2.0 - qm) / ((1.0 - q) * (1.0 - q));
  return radii.s * radii.s * sup_H * q * q * complement;
}

double abs_sum(const KernelExpansion& e) { return table_abs_sum(e.a); }

KernelExpansion kernel_coefficients(const AnalyticDomain& dom, const RadiiPair& radii,
                                    std::size_t M, std::size_t grid_N) {
  RadiiPair::checked(radii.r, radii.s, dom.R());
  check_grid(M, grid_N);
  const auto grid = kernel_grid(dom, radii, grid_N);
  const auto spectrum = fft::forward_2d(grid, grid_N, grid_N);

  KernelExpansion e;
  e.M = M;
  e.radii = radii;
  e.grid_N = grid_N;
  e.alias_risk = grid_N < 4 * M;
  e.domain_hash = domain_fingerprint(dom);
  e.sup_H = refined_sup(dom, radii, grid, grid_N);
  e.a.resize((M + 1) * (M + 1));
  const double norm = 1.0 / (static_cast<double>(grid_N) * static_cast<double>(grid_N));
  for (std::size_t m = 0; m <= M; ++m) {
    const double sm = std::pow(radii.s, static_cast<double>(m));
    for (std::size_t n = 0; n <= M; ++n) {
      const double rn = std::pow(radii.r, static_cast<double>(n));
      e.a[m * (M + 1) + n] = spectrum[m * grid_N + n] * norm / (sm * rn);
    }
  }
  e.abs_sum = abs_sum(e);
  e.tail_bound = tail_sum_bound(e.sup_H, radii, M);
  return e;
}

std::size_t default_grid_size(std::size_t M) {
  return fft::next_power_of_two(std::max<std::size_t>(256, 4 * (M + 1)));
}

KernelExpansion kernel_coefficients_auto(const AnalyticDomain& dom, const RadiiPair& radii) {
  const auto full = kernel_coefficients(dom, radii, kMaxTruncation, default_grid_size(kMaxTruncation));
  std::size_t chosen = kMaxTruncation;
  for (std::size_t M = 0; M < kMaxTruncation; ++M) {
    const auto head = full.truncated(M);
    if (head.tail_bound <= kAutoTailRatio * head.abs_sum) {
      chosen = M;
      break;
    }
  }
  const std::size_t grid = default_grid_size(chosen);
  if (grid == full.grid_N) return full.truncated(chosen);
  return kernel_coefficients(dom, radii, chosen, grid);
}

}  // namespace cauchy
