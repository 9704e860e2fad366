#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nvmio/commnet.hpp"
#include "nvmio/devices.hpp"
#include "nvmio/workload.hpp"

namespace nvmio {

/// Rank placement. Ranks are numbered node-major; the first
/// aggregators_per_node ranks on each node act as aggregators.
struct ProcessLayout {
  std::uint32_t nodes = 1;
  std::uint32_t procs_per_node = 1;
  std::uint32_t aggregators_per_node = 1;

  std::uint32_t processes() const { return nodes * procs_per_node; }
  std::uint32_t aggregators() const { return nodes * aggregators_per_node; }

  /// Global rank of aggregator `index` (0 <= index < aggregators()).
  std::uint32_t aggregator_rank(std::uint32_t index) const;

  static ProcessLayout from(const WorkloadSpec& spec) {
    return {spec.nodes, spec.procs_per_node, spec.aggregators_per_node};
  }
};

struct SimConfig {
  TransferSchedule schedule;
  CommParams comm;
  DeviceProfile device;
  ProcessLayout layout;
  Direction direction = Direction::Write;
  /// Carried for provenance; the protocol model itself is deterministic.
  std::uint64_t seed = 0;

  /// (sender rank, aggregator index) -> link coefficients.
  std::map<std::pair<std::uint32_t, std::uint32_t>, CommParams> link_overrides;
  /// iteration -> message size in MB, replacing the schedule's size.
  std::map<std::uint64_t, double> msg_size_overrides;

  /// Throws std::invalid_argument when overrides reference unknown ranks or
  /// iterations, or the layout disagrees with the schedule.
  void validate() const;
};

struct IterationRecord {
  double shuffle_s = 0.0;
  double io_s = 0.0;
};

/// One timeline: an aggregator (collective) or a process (individual).
struct LaneReport {
  std::uint32_t id = 0;    // aggregator index, or process rank
  std::uint32_t rank = 0;  // global rank
  std::vector<IterationRecord> iterations;
  double shuffle_total = 0.0;
  double io_total = 0.0;
  double total = 0.0;
};

struct SimReport {
  std::vector<LaneReport> lanes;
  double makespan = 0.0;
  double shuffle_total = 0.0;  // summed over lanes
  double io_total = 0.0;
  double shuffle_ratio = 0.0;  // shuffle / (shuffle + io), 0 when empty
};

/// Event-driven run of the two-phase protocol. Each aggregator alternates
/// a blocking shuffle (write: before I/O, read: after) and a contiguous I/O
/// phase; concurrent senders overlap, so a shuffle lasts as long as the
/// slowest link. Aggregators in their I/O phase share the device's
/// sequential bandwidth equally. No barrier between aggregators.
SimReport simulate_collective(const SimConfig& config);

/// Every process moves total/processes MB in one independent request; all
/// requests share the device bandwidth for `pattern`.
SimReport simulate_individual(double total_data_mb, std::uint32_t processes,
                              const DeviceProfile& device,
                              AccessPattern pattern = AccessPattern::Random);

}  // namespace nvmio
