#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace l1line {

/// Worker-pool size for the data-parallel loops. Zero means "resolve from
/// L1LINE_THREADS, falling back to the hardware concurrency".
struct Parallelism {
    std::size_t threads = 0;
};

std::size_t resolve_threads(Parallelism p);

/// Runs body(k) for k in [0, count) on up to `threads` workers. Each index is
/// visited exactly once; results must go to per-index slots so the outcome
/// does not depend on scheduling.
void parallel_for(std::size_t count, Parallelism p, const std::function<void(std::size_t)>& body);

}  // namespace l1line
