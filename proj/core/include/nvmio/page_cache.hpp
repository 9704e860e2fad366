#pragma once

#include <cstdint>

#include "nvmio/devices.hpp"
#include "nvmio/workload.hpp"

namespace nvmio {

/// LRU write-back page cache.
class PageCacheConfig {
 public:
  /// capacity_mb is rounded down to whole pages.
  PageCacheConfig(double capacity_mb, double page_size_kb,
                  bool flush_at_end = true);

  double capacity_mb() const noexcept { return capacity_mb_; }
  double page_size_kb() const noexcept { return page_size_kb_; }
  double page_size_mb() const noexcept { return page_size_kb_ / 1024.0; }
  std::uint64_t capacity_pages() const noexcept { return capacity_pages_; }
  /// Capacity actually simulated after rounding.
  double effective_capacity_mb() const noexcept {
    return static_cast<double>(capacity_pages_) * page_size_mb();
  }
  bool flush_at_end() const noexcept { return flush_at_end_; }

 private:
  double capacity_mb_;
  double page_size_kb_;
  std::uint64_t capacity_pages_;
  bool flush_at_end_;
};

struct PageCacheResult {
  double elapsed_s = 0.0;
  std::uint64_t accesses = 0;
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  std::uint64_t evictions = 0;
  std::uint64_t dirty_evictions = 0;
  std::uint64_t flushed_pages = 0;
};

/// Replays `trace` through the cache. Costs per page: read hit at memory
/// read speed; read miss at device random bandwidth; any cached write at
/// memory write speed (marks dirty); dirty eviction at device random
/// bandwidth; end-of-run flush at device sequential bandwidth. With zero
/// capacity every access, read or write, goes to the device.
PageCacheResult simulate_page_cache(const IoTrace& trace,
                                    const PageCacheConfig& cache,
                                    const DeviceProfile& device,
                                    const MemoryProfile& memory);

}  // namespace nvmio
