#pragma once

#include <cstddef>

namespace mactc {

// Serial is the reference path; Parallel must produce bit-identical results.
enum class Exec { Serial, Parallel };

// Caps OpenMP workers for Parallel sweeps; n <= 0 restores the default.
void set_max_threads(int n);
int max_threads();

// Runs body(i) for i in [0, n). Each index must write only its own output
// slot so the result does not depend on scheduling.
template <class Body>
void for_each_index(Exec exec, std::size_t n, Body&& body) {
    if (exec == Exec::Serial) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(max_threads())
    for (long i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
}

}  // namespace mactc
