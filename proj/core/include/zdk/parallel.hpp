#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace zdk {

/// SplitMix64 finalizer; used to derive independent substream seeds.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed of substream `stream` under master seed `seed`. Substreams are a pure
/// function of (seed, stream), so chunked work is reproducible for any worker count.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// Runs task(i) for i in [0, n_tasks) on up to `workers` threads (0 = hardware
/// concurrency). Tasks must write only to their own output slot; the caller
/// reduces slots in index order afterwards. The first exception thrown by a task
/// is rethrown on the calling thread.
void parallel_for(std::size_t n_tasks, unsigned workers, const std::function<void(std::size_t)>& task);

}  // namespace zdk
