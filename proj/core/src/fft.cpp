#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace amalgam::detail {

namespace {

// Plans are created once per (shape, direction) under a lock; executing a
// plan on new arrays is thread-safe. FFTW_ESTIMATE keeps planning
// deterministic and FFTW_UNALIGNED lets any std::vector buffer be used.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(const std::vector<int>& dims, Direction direction) {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(dims, direction);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;

    std::size_t total = 1;
    for (int d : dims) total *= static_cast<std::size_t>(d);
    auto* in = fftw_alloc_complex(total);
    auto* out = fftw_alloc_complex(total);
    const int sign = direction == Direction::forward ? FFTW_FORWARD : FFTW_BACKWARD;
    fftw_plan plan = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), in, out, sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(in);
    fftw_free(out);
    if (!plan) throw std::runtime_error("fftw: planning failed");
    plans_.emplace(std::move(key), plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<std::vector<int>, Direction>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

}  // namespace

void dft(const std::vector<int>& dims, const std::complex<double>* in,
         std::complex<double>* out, Direction direction) {
  fftw_plan plan = cache().get(dims, direction);
  // fftw_execute_dft does not modify the input of an out-of-place plan.
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

}  // namespace amalgam::detail
