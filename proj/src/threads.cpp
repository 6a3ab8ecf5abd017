#include "maxclass/threads.hpp"

#include <omp.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace maxclass {

int configure_threads() {
  if (const char* env = std::getenv("MAXCLASS_THREADS")) {
    int n = 0;
    try {
      n = std::stoi(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("MAXCLASS_THREADS is not an integer: ") + env);
    }
    if (n < 0) throw std::invalid_argument("MAXCLASS_THREADS must be >= 0");
    if (n > 0) omp_set_num_threads(n);
  }
  return omp_get_max_threads();
}

}  // namespace maxclass
