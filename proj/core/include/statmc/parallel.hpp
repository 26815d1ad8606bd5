#pragma once

#include <cstddef>
#include <functional>

namespace statmc {

/**
 * Runs body(i) for i in [0, n) on up to `threads` worker threads with a
 * static block partition. Results must be written to slot i only; with
 * per-index substreams the output is then identical for every thread
 * count. threads <= 1 runs inline.
 *
 * Exceptions thrown by body are captured and the first one (lowest
 * starting block) is rethrown on the calling thread.
 */
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace statmc
