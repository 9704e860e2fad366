#include "nvmio/page_cache.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oracles.hpp"

namespace nvmio {
namespace {

const MemoryProfile& memory() { return builtin_profiles().memory; }

std::vector<oracle::Access> as_oracle(const IoTrace& t) {
  std::vector<oracle::Access> out;
  for (const auto& a : t.accesses) {
    out.push_back({a.page, a.write});
  }
  return out;
}

IoTrace random_trace(std::mt19937_64& rng, std::uint64_t pages, std::size_t n) {
  IoTrace t;
  t.page_size_kb = 4.0;
  t.working_set_mb = static_cast<double>(pages) * 4.0 / 1024.0;
  std::uniform_int_distribution<std::uint64_t> page(0, pages - 1);
  std::bernoulli_distribution write(0.4);
  for (std::size_t i = 0; i < n; ++i) {
    t.accesses.push_back({page(rng), write(rng)});
  }
  return t;
}

TEST(PageCacheConfig, RoundsToWholePages) {
  const PageCacheConfig c(1.0, 4.0);
  EXPECT_EQ(c.capacity_pages(), 256u);
  const PageCacheConfig odd(0.01, 4.0);
  EXPECT_EQ(odd.capacity_pages(), 2u);
  EXPECT_DOUBLE_EQ(odd.effective_capacity_mb(), 8.0 / 1024.0);
  EXPECT_THROW(PageCacheConfig(-1.0, 4.0), std::invalid_argument);
  EXPECT_THROW(PageCacheConfig(1.0, 0.0), std::invalid_argument);
}

TEST(PageCache, MatchesBruteForceLru) {
  std::mt19937_64 rng(31337);
  const auto& dev = builtin_device("SSD");
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t pages = 1 + rng() % 64;
    const auto trace = random_trace(rng, pages, 1 + rng() % 400);
    const std::uint64_t cap_pages = rng() % (pages + 4);
    const bool flush = trial % 3 != 0;
    const PageCacheConfig cache(static_cast<double>(cap_pages) * 4.0 / 1024.0, 4.0, flush);
    ASSERT_EQ(cache.capacity_pages(), cap_pages);
    const auto got = simulate_page_cache(trace, cache, dev, memory());
    const auto want =
        oracle::lru_cache(as_oracle(trace), cap_pages, 4.0 / 1024.0, memory().read_bw(),
                          memory().write_bw(), dev.bdw_ran(), dev.bdw_seq(), flush);
    EXPECT_EQ(got.hits, want.hits);
    EXPECT_EQ(got.misses, want.misses);
    EXPECT_EQ(got.dirty_evictions, want.dirty_evictions);
    EXPECT_LE(oracle::relative(got.elapsed_s, want.elapsed), 1e-12);
    EXPECT_EQ(got.accesses, trace.accesses.size());
    EXPECT_EQ(got.hits + got.misses, got.accesses);
  }
}

TEST(PageCache, StreamingReadMissesEverything) {
  const auto trace = generate_trace(TracePattern::StreamingRead, 4.0, 4.0, 1, 0);
  const auto& dev = builtin_device("HDD");
  const auto r = simulate_page_cache(trace, PageCacheConfig(8.0, 4.0), dev, memory());
  EXPECT_EQ(r.hits, 0u);
  EXPECT_EQ(r.misses, 1024u);
  EXPECT_NEAR(r.elapsed_s, 1024 * (4.0 / 1024.0) / dev.bdw_ran(), 1e-12);
}

TEST(PageCache, LargeCacheHitsAfterFirstPass) {
  const auto trace = generate_trace(TracePattern::ReadWriteMix, 2.0, 4.0, 3, 0);
  const auto r = simulate_page_cache(trace, PageCacheConfig(4.0, 4.0),
                                     builtin_device("SSD"), memory());
  // Only the first write sweep of 512 pages misses.
  EXPECT_EQ(r.misses, 512u);
  EXPECT_EQ(r.hits, trace.accesses.size() - 512u);
  EXPECT_EQ(r.evictions, 0u);
  EXPECT_EQ(r.flushed_pages, 512u);
}

TEST(PageCache, ZeroCapacitySendsEverythingToDevice) {
  const auto trace = generate_trace(TracePattern::ReadWriteMix, 1.0, 4.0, 2, 0);
  const auto& dev = builtin_device("NVM");
  const auto r = simulate_page_cache(trace, PageCacheConfig(0.0, 4.0), dev, memory());
  EXPECT_EQ(r.hits, 0u);
  EXPECT_EQ(r.misses, trace.accesses.size());
  EXPECT_EQ(r.flushed_pages, 0u);
  EXPECT_NEAR(r.elapsed_s,
              static_cast<double>(trace.accesses.size()) * (4.0 / 1024.0) / dev.bdw_ran(),
              1e-12);
}

TEST(PageCache, NoFlushLeavesDirtyPages) {
  const auto trace = generate_trace(TracePattern::SequentialWrite, 1.0, 4.0, 1, 0);
  const auto& dev = builtin_device("HDD");
  const auto with = simulate_page_cache(trace, PageCacheConfig(2.0, 4.0, true), dev, memory());
  const auto without =
      simulate_page_cache(trace, PageCacheConfig(2.0, 4.0, false), dev, memory());
  EXPECT_EQ(with.flushed_pages, 256u);
  EXPECT_EQ(without.flushed_pages, 0u);
  EXPECT_NEAR(with.elapsed_s - without.elapsed_s, 1.0 / dev.bdw_seq(), 1e-12);
}

TEST(PageCache, MissesNonincreasingInCapacity) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto trace = random_trace(rng, 128, 2000);
    std::uint64_t prev = trace.accesses.size() + 1;
    for (double cap : {0.0, 0.0625, 0.125, 0.25, 0.375, 0.5, 0.75}) {
      const auto r = simulate_page_cache(trace, PageCacheConfig(cap, 4.0),
                                         builtin_device("HDD"), memory());
      EXPECT_LE(r.misses, prev);
      prev = r.misses;
    }
  }
}

TEST(PageCache, Deterministic) {
  const auto trace = generate_trace(TracePattern::ReadWriteMix, 8.0, 4.0, 2, 3);
  const PageCacheConfig cache(3.0, 4.0);
  const auto a = simulate_page_cache(trace, cache, builtin_device("SSD"), memory());
  const auto b = simulate_page_cache(trace, cache, builtin_device("SSD"), memory());
  EXPECT_EQ(a.elapsed_s, b.elapsed_s);
  EXPECT_EQ(a.dirty_evictions, b.dirty_evictions);
}

TEST(PageCache, RejectsPageSizeMismatch) {
  const auto trace = generate_trace(TracePattern::StreamingRead, 1.0, 4.0, 1, 0);
  EXPECT_THROW(simulate_page_cache(trace, PageCacheConfig(1.0, 8.0),
                                   builtin_device("SSD"), memory()),
               std::invalid_argument);
}

}  // namespace
}  // namespace nvmio
