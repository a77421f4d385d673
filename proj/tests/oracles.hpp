#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the library's series or transform code.

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

/// Generalized binomial coefficient binom(alpha, k).
inline double binomial(double alpha, std::size_t k) {
  double b = 1.0;
  for (std::size_t j = 0; j < k; ++j) b *= (alpha - static_cast<double>(j)) / static_cast<double>(j + 1);
  return b;
}

/// Coefficients of (1 + c z)^alpha up to z^order.
inline std::vector<double> binomial_series(double alpha, double c, std::size_t order) {
  std::vector<double> out(order + 1);
  for (std::size_t k = 0; k <= order; ++k) out[k] = binomial(alpha, k) * std::pow(c, static_cast<double>(k));
  return out;
}

/// Coefficients of log(1 + c z) up to z^order.
inline std::vector<double> log1p_series(double c, std::size_t order) {
  std::vector<double> out(order + 1, 0.0);
  for (std::size_t k = 1; k <= order; ++k)
    out[k] = ((k % 2) ? 1.0 : -1.0) * std::pow(c, static_cast<double>(k)) / static_cast<double>(k);
  return out;
}

/// Schoolbook long division of two real polynomials, to `order` terms.
inline std::vector<double> long_division(std::vector<double> num, const std::vector<double>& den,
                                         std::size_t order) {
  num.resize(order + 1, 0.0);
  std::vector<double> q(order + 1, 0.0);
  for (std::size_t k = 0; k <= order; ++k) {
    q[k] = num[k] / den[0];
    for (std::size_t j = 0; j < den.size() && k + j <= order; ++j) num[k + j] -= q[k] * den[j];
  }
  return q;
}

/// Bivariate Taylor table of H(z,w) for psi = z + eps z^2, built symbolically:
///   H = (1 + 2 eps z)^{1/2} (1 + 2 eps w)^{1/2} / (1 + eps (z + w))
/// with 1/(1 + eps(z+w)) = sum_j (-eps)^j (z+w)^j.
inline std::vector<std::vector<double>> quadratic_map_kernel(double eps, std::size_t M) {
  const auto b = binomial_series(0.5, 2.0 * eps, M);
  auto choose = [](std::size_t n, std::size_t k) {
    double c = 1.0;
    for (std::size_t j = 0; j < k; ++j) c = c * static_cast<double>(n - j) / static_cast<double>(j + 1);
    return c;
  };
  std::vector<std::vector<double>> a(M + 1, std::vector<double>(M + 1, 0.0));
  for (std::size_t m = 0; m <= M; ++m)
    for (std::size_t n = 0; n <= M; ++n) {
      double acc = 0.0;
      for (std::size_t i = 0; i <= m; ++i)
        for (std::size_t j = 0; j <= n; ++j) {
          const std::size_t p = m - i;
          const std::size_t q = n - j;
          acc += b[i] * b[j] * std::pow(-eps, static_cast<double>(p + q)) * choose(p + q, p);
        }
      a[m][n] = acc;
    }
  return a;
}

/// s^2 sup_H sum over (m,n) outside [0,M]^2 of r^{-(m+n+2)}, summed term by
/// term until the remaining geometric mass is negligible.
inline double brute_force_tail(double sup_H, double r, double s, std::size_t M) {
  const std::size_t K = 4000;
  double total = 0.0;
  for (std::size_t m = 0; m < K; ++m) {
    double row = 0.0;
    for (std::size_t n = 0; n < K; ++n) {
      if (m <= M && n <= M) continue;
      const double t = std::pow(r, -static_cast<double>(m + n + 2));
      if (t < 1e-30) break;
      row += t;
    }
    total += row;
    if (std::pow(r, -static_cast<double>(m + 2)) < 1e-30) break;
  }
  return s * s * sup_H * total;
}

/// Trapezoidal arc length of theta -> psi(e^{i theta}) as a chord polygon on
/// a very fine grid (second-order, independent of the exact d zeta weights).
template <typename Map>
double polygon_arclength(const Map& psi, std::size_t n) {
  double len = 0.0;
  const double two_pi = 2.0 * std::acos(-1.0);
  cplx prev = psi(cplx(1.0, 0.0));
  for (std::size_t j = 1; j <= n; ++j) {
    const cplx cur = psi(std::polar(1.0, two_pi * static_cast<double>(j) / static_cast<double>(n)));
    len += std::abs(cur - prev);
    prev = cur;
  }
  return len;
}

}  // namespace oracle
