#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nvmio/commnet.hpp"
#include "nvmio/devices.hpp"
#include "nvmio/workload.hpp"

namespace nvmio {

/// Predicted time split for one strategy. total is t_comm + t_io + t_other
/// evaluated once, in that order.
struct CostBreakdown {
  double t_comm = 0.0;
  double t_io = 0.0;
  double t_other = 0.0;
  double total = 0.0;

  static CostBreakdown of(double t_comm, double t_io, double t_other) {
    return {t_comm, t_io, t_other, t_comm + t_io + t_other};
  }
};

enum class Strategy { Collective, Individual };

std::string_view to_string(Strategy strategy);

struct Decision {
  Strategy strategy = Strategy::Individual;
  double t_collective = 0.0;
  double t_individual = 0.0;
  double benefit = 0.0;  // t_individual - t_collective
};

/// Two-phase collective I/O. Shuffle is charged per iteration on the slowest
/// aggregator (t_s + t_w * msg_i * tau); the contiguous I/O of all aggregators
/// drains through the shared end-to-end sequential bandwidth.
CostBreakdown collective_time(const TransferSchedule& schedule,
                              const CommParams& comm,
                              const DeviceProfile& device,
                              double t_other = 0.0);

/// Uncoordinated per-process I/O; no shuffle.
CostBreakdown individual_time(double total_data_mb, const DeviceProfile& device,
                              AccessPattern pattern = AccessPattern::Random,
                              double t_other = 0.0);

/// Residual cost after the modeled terms, clamped at zero.
double fit_t_other(double measured_total, double modeled_without_other);

/// Collective wins only on a strictly positive benefit.
Decision decide(const TransferSchedule& schedule, double total_data_mb,
                const CommParams& comm, const DeviceProfile& device,
                double t_other_collective = 0.0,
                double t_other_individual = 0.0,
                AccessPattern individual_pattern = AccessPattern::Random);

struct TradeoffRow {
  std::string device;
  double msg_size_mb = 0.0;
  double shuffle_cost = 0.0;
  double benefit = 0.0;
};

/// One-iteration tradeoff between shuffle cost and collective benefit. Each
/// of `aggregators` moves one message of m MB; the individual path moves the
/// same aggregators * m MB at random bandwidth. Rows are device-major in
/// input order.
std::vector<TradeoffRow> tradeoff_sweep(std::span<const double> msg_sizes_mb,
                                        const CommParams& comm,
                                        std::span<const DeviceProfile> devices,
                                        double tau, std::uint32_t aggregators);

}  // namespace nvmio
