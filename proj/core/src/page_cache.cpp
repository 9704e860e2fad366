#include "nvmio/page_cache.hpp"

#include <cmath>
#include <list>
#include <stdexcept>
#include <vector>

namespace nvmio {

PageCacheConfig::PageCacheConfig(double capacity_mb, double page_size_kb,
                                 bool flush_at_end)
    : capacity_mb_(capacity_mb),
      page_size_kb_(page_size_kb),
      capacity_pages_(0),
      flush_at_end_(flush_at_end) {
  if (!(capacity_mb >= 0.0) || !std::isfinite(capacity_mb)) {
    throw std::invalid_argument("cache capacity must be >= 0");
  }
  if (!(page_size_kb > 0.0) || !std::isfinite(page_size_kb)) {
    throw std::invalid_argument("cache page size must be > 0");
  }
  const double pages = capacity_mb * 1024.0 / page_size_kb;
  const double nearest = std::round(pages);
  capacity_pages_ = static_cast<std::uint64_t>(
      std::abs(pages - nearest) <= 1e-9 * std::max(1.0, pages)
          ? nearest
          : std::floor(pages));
}

namespace {

// Dense LRU over page indices: most recent at the front.
class LruCache {
 public:
  LruCache(std::uint64_t capacity, std::uint64_t page_span)
      : capacity_(capacity), slots_(page_span, order_.end()),
        dirty_(page_span, false) {}

  bool touch(std::uint64_t page) {
    auto it = slots_[page];
    if (it == order_.end()) {
      return false;
    }
    order_.splice(order_.begin(), order_, it);
    return true;
  }

  /// Inserts a missing page; returns true if a dirty victim was evicted.
  struct Eviction {
    bool evicted = false;
    bool dirty = false;
  };
  Eviction insert(std::uint64_t page) {
    Eviction ev;
    if (order_.size() == capacity_) {
      const std::uint64_t victim = order_.back();
      order_.pop_back();
      slots_[victim] = order_.end();
      ev.evicted = true;
      ev.dirty = dirty_[victim];
      dirty_[victim] = false;
    }
    order_.push_front(page);
    slots_[page] = order_.begin();
    return ev;
  }

  void mark_dirty(std::uint64_t page) { dirty_[page] = true; }

  std::uint64_t dirty_count() const {
    std::uint64_t n = 0;
    for (std::uint64_t page : order_) {
      n += dirty_[page] ? 1 : 0;
    }
    return n;
  }

 private:
  std::uint64_t capacity_;
  std::list<std::uint64_t> order_;
  std::vector<std::list<std::uint64_t>::iterator> slots_;
  std::vector<bool> dirty_;
};

}  // namespace

PageCacheResult simulate_page_cache(const IoTrace& trace,
                                    const PageCacheConfig& cache,
                                    const DeviceProfile& device,
                                    const MemoryProfile& memory) {
  if (trace.page_size_kb != cache.page_size_kb()) {
    throw std::invalid_argument("trace and cache page sizes differ");
  }
  const double page_mb = cache.page_size_mb();
  const double read_hit = page_mb / memory.read_bw();
  const double write_cached = page_mb / memory.write_bw();
  const double device_random = page_mb / device.bdw_ran();

  std::uint64_t span = trace.page_count();
  for (const auto& a : trace.accesses) {
    if (a.page >= span) {
      throw std::invalid_argument("trace page index outside its working set");
    }
  }

  PageCacheResult r;
  r.accesses = trace.accesses.size();

  if (cache.capacity_pages() == 0) {
    r.misses = r.accesses;
    r.elapsed_s = static_cast<double>(r.accesses) * device_random;
    return r;
  }

  LruCache lru(cache.capacity_pages(), span);
  double elapsed = 0.0;
  for (const auto& a : trace.accesses) {
    if (lru.touch(a.page)) {
      ++r.hits;
      elapsed += a.write ? write_cached : read_hit;
    } else {
      ++r.misses;
      const auto ev = lru.insert(a.page);
      if (ev.evicted) {
        ++r.evictions;
        if (ev.dirty) {
          ++r.dirty_evictions;
          elapsed += device_random;
        }
      }
      elapsed += a.write ? write_cached : device_random;
    }
    if (a.write) {
      lru.mark_dirty(a.page);
    }
  }
  if (cache.flush_at_end()) {
    r.flushed_pages = lru.dirty_count();
    elapsed += static_cast<double>(r.flushed_pages) * page_mb / device.bdw_seq();
  }
  r.elapsed_s = elapsed;
  return r;
}

}  // namespace nvmio
