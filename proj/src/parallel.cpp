#include "curvlab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace curvlab {

std::size_t default_thread_count() {
  if (const char* env = std::getenv("CURVLAB_THREADS")) {
    try {
      const long value = std::stol(env);
      if (value > 0) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace curvlab
