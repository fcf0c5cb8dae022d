#include "plumb/kernels.hpp"

#include <exception>
#include <mutex>

#include "plumb/bounds.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace plumb {

namespace {

// Exceptions may not cross an OpenMP region boundary; keep the first one.
class FirstError {
 public:
  void capture() {
    std::lock_guard lock(mutex_);
    if (!error_) error_ = std::current_exception();
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr error_;
};

TreeMinimum first_minimum(const std::vector<int>& values) {
  TreeMinimum best{values.front(), 0};
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] < best.value) best = {values[i], i};
  return best;
}

}  // namespace

int available_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

TreeMinimum min_fpbk_over_trees_serial(const SeifertGraph& g, std::span<const SpanningTree> trees) {
  std::vector<int> values(trees.size());
  for (std::size_t i = 0; i < trees.size(); ++i) values[i] = fpbk_value_for_tree(g, trees[i]);
  return first_minimum(values);
}

TreeMinimum min_fpbk_over_trees_parallel(const SeifertGraph& g,
                                         std::span<const SpanningTree> trees) {
  std::vector<int> values(trees.size());
  FirstError error;
  const auto n = static_cast<std::ptrdiff_t>(trees.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      values[static_cast<std::size_t>(i)] = fpbk_value_for_tree(g, trees[static_cast<std::size_t>(i)]);
    } catch (...) {
      error.capture();
    }
  }
  error.rethrow();
  return first_minimum(values);
}

std::vector<std::string> map_ordered_serial(std::size_t count,
                                            const std::function<std::string(std::size_t)>& job) {
  std::vector<std::string> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = job(i);
  return out;
}

std::vector<std::string> map_ordered_parallel(std::size_t count,
                                              const std::function<std::string(std::size_t)>& job) {
  std::vector<std::string> out(count);
  FirstError error;
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = job(static_cast<std::size_t>(i));
    } catch (...) {
      error.capture();
    }
  }
  error.rethrow();
  return out;
}

}  // namespace plumb
