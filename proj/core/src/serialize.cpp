#include "nvmio/serialize.hpp"

#include <charconv>
#include <ostream>

namespace nvmio {

using nlohmann::json;

json to_json(const CostBreakdown& cost) {
  return json{{"t_comm", cost.t_comm},
              {"t_io", cost.t_io},
              {"t_other", cost.t_other},
              {"total", cost.total}};
}

json to_json(const Decision& decision) {
  return json{{"strategy", to_string(decision.strategy)},
              {"t_collective", decision.t_collective},
              {"t_individual", decision.t_individual},
              {"benefit", decision.benefit}};
}

json to_json(const TradeoffRow& row) {
  return json{{"device", row.device},
              {"msg_size_mb", row.msg_size_mb},
              {"shuffle_cost", row.shuffle_cost},
              {"benefit", row.benefit}};
}

json to_json(const SimReport& report) {
  json lanes = json::array();
  for (const auto& lane : report.lanes) {
    json iterations = json::array();
    for (const auto& it : lane.iterations) {
      iterations.push_back({{"shuffle_s", it.shuffle_s}, {"io_s", it.io_s}});
    }
    lanes.push_back({{"id", lane.id},
                     {"rank", lane.rank},
                     {"shuffle_total", lane.shuffle_total},
                     {"io_total", lane.io_total},
                     {"total", lane.total},
                     {"iterations", std::move(iterations)}});
  }
  return json{{"makespan", report.makespan},
              {"shuffle_total", report.shuffle_total},
              {"io_total", report.io_total},
              {"shuffle_ratio", report.shuffle_ratio},
              {"lanes", std::move(lanes)}};
}

json to_json(const CommFit& fit) {
  return json{{"t_s", fit.t_s},
              {"t_w", fit.t_w},
              {"raw_t_s", fit.raw_t_s},
              {"rmse", fit.rmse},
              {"valid", fit.valid},
              {"residuals", fit.residuals},
              {"warnings", fit.warnings}};
}

json to_json(const PageCacheResult& result) {
  return json{{"elapsed_s", result.elapsed_s},
              {"accesses", result.accesses},
              {"hits", result.hits},
              {"misses", result.misses},
              {"evictions", result.evictions},
              {"dirty_evictions", result.dirty_evictions},
              {"flushed_pages", result.flushed_pages}};
}

json to_json(const TransferSchedule& schedule) {
  return json{{"iter", schedule.iter()},
              {"msg_size_mb", schedule.msg_size()},
              {"tau", schedule.tau()},
              {"aggregators", schedule.aggregators()},
              {"per_aggregator_data_mb", schedule.per_aggregator_data()},
              {"total_data_mb", schedule.total_data()}};
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::string format_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

void write_cost_csv(std::ostream& out, std::span<const CostRow> rows) {
  out << "device,strategy,t_comm_s,t_io_s,t_other_s,total_s\n";
  for (const auto& r : rows) {
    out << r.device << ',' << to_string(r.strategy) << ','
        << format_number(r.cost.t_comm) << ',' << format_number(r.cost.t_io)
        << ',' << format_number(r.cost.t_other) << ','
        << format_number(r.cost.total) << '\n';
  }
}

void write_tradeoff_csv(std::ostream& out, std::span<const TradeoffRow> rows) {
  out << "device,msg_size_mb,shuffle_cost_s,benefit_s\n";
  for (const auto& r : rows) {
    out << r.device << ',' << format_number(r.msg_size_mb) << ','
        << format_number(r.shuffle_cost) << ',' << format_number(r.benefit)
        << '\n';
  }
}

void write_sim_csv(std::ostream& out, const SimReport& report) {
  out << "aggregator,iteration,shuffle_s,io_s\n";
  for (const auto& lane : report.lanes) {
    for (std::size_t i = 0; i < lane.iterations.size(); ++i) {
      out << lane.id << ',' << i << ','
          << format_number(lane.iterations[i].shuffle_s) << ','
          << format_number(lane.iterations[i].io_s) << '\n';
    }
  }
}

}  // namespace nvmio
