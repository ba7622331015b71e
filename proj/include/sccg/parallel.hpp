#pragma once

#include <cstddef>
#include <functional>

namespace sccg {

// Worker count used when a caller passes 0. Starts at the machine's hardware
// concurrency.
unsigned default_threads();
void set_default_threads(unsigned threads);

// Runs body(i) for i in [0, count) on up to `threads` workers. Indices are
// handed out dynamically, so body must not depend on execution order. The
// first exception thrown by any body is rethrown after all workers stop.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace sccg
