#include "mvlift/parallel.hpp"

#include <cstdlib>
#include <string>

namespace mvlift {

int thread_cap() {
  int available = omp_get_max_threads();
  if (const char* env = std::getenv("MVLIFT_THREADS")) {
    try {
      int requested = std::stoi(env);
      if (requested > 0) return requested < available ? requested : available;
    } catch (...) {
      // unparsable values fall back to the OpenMP default
    }
  }
  return available;
}

}  // namespace mvlift
