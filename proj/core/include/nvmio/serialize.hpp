#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "nvmio/commnet.hpp"
#include "nvmio/costmodel.hpp"
#include "nvmio/page_cache.hpp"
#include "nvmio/simulator.hpp"

namespace nvmio {

// JSON documents use the field names of the C++ types. CSV output has a
// mandatory header row, '.' decimals and LF line endings.

nlohmann::json to_json(const CostBreakdown& cost);
nlohmann::json to_json(const Decision& decision);
nlohmann::json to_json(const TradeoffRow& row);
nlohmann::json to_json(const SimReport& report);
nlohmann::json to_json(const CommFit& fit);
nlohmann::json to_json(const PageCacheResult& result);
nlohmann::json to_json(const TransferSchedule& schedule);

/// Canonical text of a document: two-space indent, trailing newline.
std::string dump(const nlohmann::json& doc);

/// Shortest decimal that round-trips the double.
std::string format_number(double value);

struct CostRow {
  std::string device;
  Strategy strategy;
  CostBreakdown cost;
};

void write_cost_csv(std::ostream& out, std::span<const CostRow> rows);
void write_tradeoff_csv(std::ostream& out, std::span<const TradeoffRow> rows);
/// Columns: aggregator,iteration,shuffle_s,io_s
void write_sim_csv(std::ostream& out, const SimReport& report);

}  // namespace nvmio
