#include "nvmio/costmodel.hpp"

#include <stdexcept>

namespace nvmio {

std::string_view to_string(Strategy strategy) {
  return strategy == Strategy::Collective ? "Collective" : "Individual";
}

namespace {

void check_t_other(double t_other) {
  if (!(t_other >= 0.0)) {
    throw std::invalid_argument("t_other must be >= 0");
  }
}

}  // namespace

CostBreakdown collective_time(const TransferSchedule& schedule,
                              const CommParams& comm,
                              const DeviceProfile& device, double t_other) {
  check_t_other(t_other);
  // Sum over iterations of (t_s + t_w * msg_i * tau), with sum(msg_i) equal
  // to the per-aggregator volume.
  const double t_comm =
      static_cast<double>(schedule.iter()) * comm.t_s() +
      comm.t_w() * schedule.tau() * schedule.per_aggregator_data();
  const double t_io = schedule.total_data() / device.bdw_seq();
  return CostBreakdown::of(t_comm, t_io, t_other);
}

CostBreakdown individual_time(double total_data_mb, const DeviceProfile& device,
                              AccessPattern pattern, double t_other) {
  check_t_other(t_other);
  if (!(total_data_mb >= 0.0)) {
    throw std::invalid_argument("total data must be >= 0");
  }
  return CostBreakdown::of(0.0, total_data_mb / device.bandwidth(pattern),
                           t_other);
}

double fit_t_other(double measured_total, double modeled_without_other) {
  if (!(measured_total >= 0.0) || !(modeled_without_other >= 0.0)) {
    throw std::invalid_argument("fit_t_other: times must be >= 0");
  }
  const double residual = measured_total - modeled_without_other;
  return residual > 0.0 ? residual : 0.0;
}

Decision decide(const TransferSchedule& schedule, double total_data_mb,
                const CommParams& comm, const DeviceProfile& device,
                double t_other_collective, double t_other_individual,
                AccessPattern individual_pattern) {
  const auto coll = collective_time(schedule, comm, device, t_other_collective);
  const auto indiv = individual_time(total_data_mb, device, individual_pattern,
                                     t_other_individual);
  Decision d;
  d.t_collective = coll.total;
  d.t_individual = indiv.total;
  d.benefit = indiv.total - coll.total;
  d.strategy = d.benefit > 0.0 ? Strategy::Collective : Strategy::Individual;
  return d;
}

std::vector<TradeoffRow> tradeoff_sweep(std::span<const double> msg_sizes_mb,
                                        const CommParams& comm,
                                        std::span<const DeviceProfile> devices,
                                        double tau, std::uint32_t aggregators) {
  if (msg_sizes_mb.empty()) {
    throw std::invalid_argument("tradeoff sweep needs at least one size");
  }
  for (double m : msg_sizes_mb) {
    if (!(m > 0.0)) {
      throw std::invalid_argument("tradeoff sweep sizes must be > 0");
    }
  }
  std::vector<TradeoffRow> rows;
  rows.reserve(devices.size() * msg_sizes_mb.size());
  for (const auto& device : devices) {
    for (double m : msg_sizes_mb) {
      const auto one = TransferSchedule::uniform(1, m, tau, aggregators);
      const double coll = collective_time(one, comm, device).total;
      const double indiv =
          individual_time(one.total_data(), device, AccessPattern::Random)
              .total;
      rows.push_back({device.name(), m, transfer_time(comm, m, tau),
                      indiv - coll});
    }
  }
  return rows;
}

}  // namespace nvmio
