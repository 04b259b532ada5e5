#pragma once

#include <cstddef>
#include <functional>

namespace lzdist {

// Runs fn(0..count-1) on up to `jobs` threads (serial when jobs <= 1). Items
// are claimed from a shared counter, so output slots must be preallocated by
// the caller. The first exception thrown by any item is rethrown after all
// workers finish.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn);

}  // namespace lzdist
