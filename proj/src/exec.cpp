#include "mactc/exec.hpp"

#include <omp.h>

#include <atomic>

namespace mactc {

namespace {
std::atomic<int> g_threads{0};
}

void set_max_threads(int n) { g_threads = n > 0 ? n : 0; }

int max_threads() {
    const int n = g_threads.load();
    return n > 0 ? n : omp_get_max_threads();
}

}  // namespace mactc
