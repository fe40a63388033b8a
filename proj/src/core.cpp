#include "zonolat/core.hpp"

#include <cstdlib>
#include <thread>

namespace zonolat {

unsigned default_thread_count() {
  if (const char* env = std::getenv("ZONOLAT_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && value >= 1) return static_cast<unsigned>(value);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace zonolat
