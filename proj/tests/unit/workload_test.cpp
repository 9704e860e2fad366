#include "nvmio/workload.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "nvmio/error.hpp"

namespace nvmio {
namespace {

WorkloadSpec spec(std::uint32_t nodes, std::uint32_t ppn, std::uint32_t agg,
                  std::uint32_t seg, double block, double transfer = 16.0) {
  WorkloadSpec w;
  w.nodes = nodes;
  w.procs_per_node = ppn;
  w.aggregators_per_node = agg;
  w.segment_count = seg;
  w.block_size_mb = block;
  w.transfer_size_mb = transfer;
  return w;
}

TEST(TotalData, Examples) {
  EXPECT_DOUBLE_EQ(total_data(spec(4, 4, 1, 2, 512)), 16384.0);
  EXPECT_DOUBLE_EQ(total_data(spec(1, 1, 1, 1, 1, 1)), 1.0);
  EXPECT_DOUBLE_EQ(total_data(spec(2, 8, 1, 2, 64)), 2048.0);
}

TEST(TotalData, CommutesNodesAndProcs) {
  std::mt19937 rng(1);
  std::uniform_int_distribution<std::uint32_t> n(1, 64);
  for (int i = 0; i < 200; ++i) {
    const auto a = n(rng), b = n(rng), s = n(rng);
    EXPECT_EQ(total_data(spec(a, b, 1, s, 3.5)), total_data(spec(b, a, 1, s, 3.5)));
  }
}

TEST(WorkloadSpec, ValidationErrors) {
  EXPECT_THROW(spec(0, 1, 1, 1, 1).validate(), std::invalid_argument);
  EXPECT_THROW(spec(1, 2, 3, 1, 1).validate(), std::invalid_argument);
  EXPECT_THROW(spec(1, 1, 1, 1, 0).validate(), std::invalid_argument);
  EXPECT_THROW(spec(1, 1, 1, 1, 1, -1).validate(), std::invalid_argument);
}

TEST(EstimateTau, Examples) {
  // 8 processes, 2 aggregators.
  EXPECT_DOUBLE_EQ(estimate_tau(spec(2, 4, 1, 1, 1)), 0.75);
  EXPECT_DOUBLE_EQ(estimate_tau(spec(4, 2, 2, 1, 1)), 0.0);
  EXPECT_DOUBLE_EQ(estimate_tau(spec(4, 4, 1, 1, 1)), 0.75);
}

TEST(EstimateTau, InUnitIntervalAndZeroIffAllAggregate) {
  for (std::uint32_t nodes = 1; nodes <= 6; ++nodes) {
    for (std::uint32_t ppn = 1; ppn <= 8; ++ppn) {
      for (std::uint32_t agg = 1; agg <= ppn; ++agg) {
        const double tau = estimate_tau(spec(nodes, ppn, agg, 1, 1));
        EXPECT_GE(tau, 0.0);
        EXPECT_LE(tau, 1.0);
        EXPECT_EQ(tau == 0.0, agg == ppn);
      }
    }
  }
}

TEST(DeriveSchedule, Examples) {
  const auto v = derive_schedule(spec(4, 4, 1, 2, 512), 1.0);
  EXPECT_EQ(v.iter(), 256u);
  EXPECT_EQ(v.msg_size(), 16.0);
  EXPECT_EQ(v.tau(), 1.0);
  EXPECT_EQ(v.per_aggregator_data(), 4096.0);
  EXPECT_EQ(v.total_data(), 16384.0);

  const auto single = derive_schedule(spec(1, 1, 1, 1, 16, 16));
  EXPECT_EQ(single.iter(), 1u);

  // 2048 / 2 / 16 and (16 - 2) / 16.
  const auto two = derive_schedule(spec(2, 8, 1, 2, 64));
  EXPECT_EQ(two.iter(), 64u);
  EXPECT_EQ(two.msg_size(), 16.0);
  EXPECT_DOUBLE_EQ(two.tau(), 0.875);
}

TEST(DeriveSchedule, RaggedTail) {
  // 3 x 10 MB = 30 MB per aggregator in 8 MB buffers: 8, 8, 8, 6.
  const auto s = derive_schedule(spec(1, 3, 1, 1, 10, 8));
  ASSERT_EQ(s.iter(), 4u);
  EXPECT_EQ(s.msg_size_at(0), 8.0);
  EXPECT_EQ(s.msg_size_at(2), 8.0);
  EXPECT_DOUBLE_EQ(s.msg_size_at(3), 6.0);
  EXPECT_THROW(s.msg_size_at(4), std::out_of_range);
}

TEST(DeriveSchedule, TauOverrideValidated) {
  EXPECT_THROW(derive_schedule(spec(1, 1, 1, 1, 1), 1.2), std::invalid_argument);
}

TEST(DeriveSchedule, IterationCountBracketsTheVolume) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::uint32_t> count(1, 8);
  std::uniform_real_distribution<double> size(0.01, 100.0);
  for (int i = 0; i < 2000; ++i) {
    const std::uint32_t ppn = count(rng);
    std::uniform_int_distribution<std::uint32_t> agg(1, ppn);
    const auto w = spec(count(rng), ppn, agg(rng), count(rng), size(rng), size(rng));
    const auto s = derive_schedule(w);
    const double iter = static_cast<double>(s.iter());
    const double slack = 1e-9 * s.per_aggregator_data();
    EXPECT_GE(iter * s.msg_size() + slack, s.per_aggregator_data());
    EXPECT_LT((iter - 1) * s.msg_size(), s.per_aggregator_data());
    double sum = 0.0;
    for (std::uint64_t k = 0; k < s.iter(); ++k) {
      EXPECT_GT(s.msg_size_at(k), 0.0);
      EXPECT_LE(s.msg_size_at(k), s.msg_size());
      sum += s.msg_size_at(k);
    }
    EXPECT_NEAR(sum, s.per_aggregator_data(), 1e-9 * s.per_aggregator_data());
  }
}

TEST(DeriveSchedule, IntegerQuotientDoesNotGrowTail) {
  // 0.3 / 0.1 is 2.9999999999999996 in binary floating point.
  const auto s = TransferSchedule::from_volume(0.3, 0.1, 0.5, 1);
  EXPECT_EQ(s.iter(), 3u);
  const auto t = TransferSchedule::from_volume(0.7, 0.1, 0.5, 1);
  EXPECT_EQ(t.iter(), 7u);
}

TEST(GenerateTrace, StreamingRead) {
  const auto t = generate_trace(TracePattern::StreamingRead, 1.0, 4.0, 1, 0);
  ASSERT_EQ(t.accesses.size(), 256u);
  for (std::size_t i = 0; i < t.accesses.size(); ++i) {
    EXPECT_EQ(t.accesses[i].page, i);
    EXPECT_FALSE(t.accesses[i].write);
  }
}

TEST(GenerateTrace, StreamingReadNeverRepeats) {
  for (std::uint32_t passes : {1u, 3u}) {
    const auto t = generate_trace(TracePattern::StreamingRead, 2.0, 4.0, passes, 9);
    std::set<std::uint64_t> seen;
    for (const auto& a : t.accesses) {
      EXPECT_TRUE(seen.insert(a.page).second);
    }
  }
}

TEST(GenerateTrace, SequentialWriteTwoPasses) {
  const auto t = generate_trace(TracePattern::SequentialWrite, 1.0, 4.0, 2, 0);
  ASSERT_EQ(t.accesses.size(), 512u);
  for (std::size_t i = 0; i < t.accesses.size(); ++i) {
    EXPECT_EQ(t.accesses[i].page, i % 256);
    EXPECT_TRUE(t.accesses[i].write);
  }
}

TEST(GenerateTrace, ReadWriteMixAlternatesSweeps) {
  const auto t = generate_trace(TracePattern::ReadWriteMix, 1.0, 4.0, 2, 0);
  ASSERT_EQ(t.accesses.size(), 4u * 256u);
  for (std::size_t i = 0; i < t.accesses.size(); ++i) {
    EXPECT_EQ(t.accesses[i].page, i % 256);
    EXPECT_EQ(t.accesses[i].write, (i / 256) % 2 == 0);
  }
}

TEST(GenerateTrace, DeterministicPerSeed) {
  for (auto p : {TracePattern::SequentialWrite, TracePattern::ReadWriteMix,
                 TracePattern::StreamingRead}) {
    const auto a = generate_trace(p, 3.0, 4.0, 2, 42);
    const auto b = generate_trace(p, 3.0, 4.0, 2, 42);
    EXPECT_EQ(a.accesses, b.accesses);
    for (const auto& x : a.accesses) {
      EXPECT_LT(x.page, a.page_count());
    }
  }
}

TEST(GenerateTrace, RejectsDegenerateInput) {
  EXPECT_THROW(generate_trace(TracePattern::StreamingRead, 0.001, 4.0, 1, 0),
               std::invalid_argument);
  EXPECT_THROW(generate_trace(TracePattern::StreamingRead, 1.0, 4.0, 0, 0),
               std::invalid_argument);
}

TEST(TraceText, WriteThenReadPreservesAccesses) {
  const auto t = generate_trace(TracePattern::ReadWriteMix, 0.5, 4.0, 2, 1);
  std::stringstream buf;
  write_trace(buf, t);
  EXPECT_EQ(buf.str().substr(0, 20), "page_index,op\n0,W\n1,");
  const auto back = read_trace(buf, 4.0);
  EXPECT_EQ(back.accesses, t.accesses);
  EXPECT_EQ(back.page_count(), t.page_count());
}

TEST(TraceText, BadLinesNameTheLine) {
  std::istringstream in("page_index,op\n0,R\n1,X\n");
  try {
    read_trace(in, 4.0);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  std::istringstream outside("0,R\n9,W\n");
  EXPECT_THROW(read_trace(outside, 4.0, 0.01), ConfigError);
}

}  // namespace
}  // namespace nvmio
