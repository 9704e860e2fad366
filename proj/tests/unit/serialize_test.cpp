#include "nvmio/serialize.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

namespace nvmio {
namespace {

SimReport small_report() {
  SimConfig cfg{TransferSchedule::from_volume(40.0, 16.0, 0.75, 2),
                CommParams::reference(),
                builtin_device("SSD"),
                ProcessLayout{2, 2, 1},
                Direction::Write,
                0,
                {},
                {}};
  return simulate_collective(cfg);
}

TEST(FormatNumber, ShortestRoundTrip) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(420.0), "420");
  EXPECT_EQ(format_number(-2.5e-7), "-2.5e-07");
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> any(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double v = any(rng);
    EXPECT_EQ(std::stod(format_number(v)), v);
  }
}

TEST(Json, SimReportRoundTripsToIdenticalBytes) {
  const std::string first = dump(to_json(small_report()));
  const auto parsed = nlohmann::json::parse(first);
  EXPECT_EQ(dump(parsed), first);
  EXPECT_EQ(first.back(), '\n');
  EXPECT_EQ(parsed["lanes"].size(), 2u);
  EXPECT_EQ(parsed["lanes"][0]["iterations"].size(), 3u);
  EXPECT_EQ(parsed["makespan"].get<double>(), small_report().makespan);
}

TEST(Json, FieldNames) {
  const auto d = to_json(Decision{Strategy::Collective, 1.0, 3.0, 2.0});
  EXPECT_EQ(d["strategy"], "Collective");
  EXPECT_EQ(d["benefit"], 2.0);
  const auto c = to_json(CostBreakdown::of(1.0, 2.0, 0.5));
  EXPECT_EQ(c["total"], 3.5);
  const auto s = to_json(TransferSchedule::uniform(256, 16.0, 1.0, 4));
  EXPECT_EQ(s["iter"], 256);
  EXPECT_EQ(s["total_data_mb"], 16384.0);
  const auto p = to_json(PageCacheResult{1.5, 10, 7, 3, 1, 1, 2});
  EXPECT_EQ(p["hits"], 7);
  EXPECT_EQ(p["flushed_pages"], 2);
}

TEST(Csv, SimRowsPerIteration) {
  std::ostringstream out;
  write_sim_csv(out, small_report());
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "aggregator,iteration,shuffle_s,io_s");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 3);
  }
  EXPECT_EQ(rows, 6);
  EXPECT_EQ(out.str().find('\r'), std::string::npos);
}

TEST(Csv, CostAndTradeoffHeaders) {
  std::ostringstream cost;
  const std::vector<CostRow> rows{
      {"HDD", Strategy::Individual, CostBreakdown::of(0.0, 613.5, 0.0)}};
  write_cost_csv(cost, rows);
  EXPECT_EQ(cost.str(),
            "device,strategy,t_comm_s,t_io_s,t_other_s,total_s\n"
            "HDD,Individual,0,613.5,0,613.5\n");

  std::ostringstream sweep;
  const std::vector<TradeoffRow> t{{"NVM", 2.0, 0.25, -0.125}};
  write_tradeoff_csv(sweep, t);
  EXPECT_EQ(sweep.str(),
            "device,msg_size_mb,shuffle_cost_s,benefit_s\nNVM,2,0.25,-0.125\n");
}

}  // namespace
}  // namespace nvmio
