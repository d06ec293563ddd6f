#include "prelie/parallel.hpp"

#include <cstdlib>
#include <string>

namespace prelie {

int default_thread_count() {
  if (const char* env = std::getenv("PRELIE_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (...) {
      // fall through to hardware concurrency
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace prelie
