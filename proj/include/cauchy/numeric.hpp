#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <span>

namespace cauchy {

using cplx = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr cplx kI{0.0, 1.0};

/// Fixed-order pairwise (cascade) summation. The result depends only on the
/// input order, never on threading.
cplx pairwise_sum(std::span<const cplx> xs);
double pairwise_sum(std::span<const double> xs);

/// Worker count: hardware concurrency capped by CAUCHY_THREADS when set.
std::size_t worker_count();

/// Runs body(i) for i in [0, n). Each index must write only to its own
/// output slot; under that rule the results are identical to a serial loop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace cauchy
