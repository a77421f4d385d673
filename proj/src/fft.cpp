#include "cauchy/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "cauchy/error.hpp"

namespace cauchy::fft {

namespace {

// Planning in FFTW is not thread-safe; execution of an existing plan on new
// arrays is. Plans are kept for the life of the process.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_plan cached_plan(int n, int sign) {
  static std::map<std::pair<int, int>, fftw_plan> plans;
  std::lock_guard lock(planner_mutex());
  auto it = plans.find({n, sign});
  if (it != plans.end()) return it->second;
  std::vector<cplx> scratch_in(static_cast<std::size_t>(n)), scratch_out(static_cast<std::size_t>(n));
  const fftw_plan plan =
      fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(scratch_in.data()),
                       reinterpret_cast<fftw_complex*>(scratch_out.data()), sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
  plans.emplace(std::make_pair(n, sign), plan);
  return plan;
}

std::vector<cplx> run_1d(const std::vector<cplx>& x, int sign) {
  std::vector<cplx> in(x);
  std::vector<cplx> out(x.size());
  if (x.empty()) return out;
  fftw_execute_dft(cached_plan(static_cast<int>(x.size()), sign), reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

}  // namespace

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::vector<cplx> forward(const std::vector<cplx>& x) { return run_1d(x, FFTW_FORWARD); }

std::vector<cplx> inverse(const std::vector<cplx>& x) { return run_1d(x, FFTW_BACKWARD); }

std::vector<cplx> forward_2d(const std::vector<cplx>& x, std::size_t rows, std::size_t cols) {
  if (x.size() != rows * cols) throw Error(ErrorKind::SizeError, "2-D transform shape mismatch");
  std::vector<cplx> in(x);
  std::vector<cplx> out(x.size());
  auto* ip = reinterpret_cast<fftw_complex*>(in.data());
  auto* op = reinterpret_cast<fftw_complex*>(out.data());
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_2d(static_cast<int>(rows), static_cast<int>(cols), ip, op, FFTW_FORWARD,
                            FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

}  // namespace cauchy::fft
