#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

namespace nvmio {

enum class Direction { Read, Write };

std::string_view to_string(Direction direction);

/// IOR-style job description. Sizes in MB.
struct WorkloadSpec {
  std::uint32_t nodes = 1;
  std::uint32_t procs_per_node = 1;
  std::uint32_t aggregators_per_node = 1;
  std::uint32_t segment_count = 1;
  double block_size_mb = 1.0;
  double transfer_size_mb = 1.0;  // collective buffer size
  bool reorder_random = false;
  Direction direction = Direction::Write;

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;

  std::uint32_t processes() const { return nodes * procs_per_node; }
  std::uint32_t aggregators() const { return nodes * aggregators_per_node; }
};

/// Per-aggregator iteration plan of the two-phase protocol. Every iteration
/// moves msg_size_mb except possibly the last, which carries the remainder.
class TransferSchedule {
 public:
  /// `iter` full iterations of `msg_size_mb` on each of `aggregators`.
  static TransferSchedule uniform(std::uint64_t iter, double msg_size_mb,
                                  double tau, std::uint32_t aggregators);

  /// Splits per-aggregator data into buffer-sized iterations.
  static TransferSchedule from_volume(double per_aggregator_data_mb,
                                      double msg_size_mb, double tau,
                                      std::uint32_t aggregators);

  std::uint64_t iter() const noexcept { return iter_; }
  double msg_size() const noexcept { return msg_size_; }
  double tau() const noexcept { return tau_; }
  std::uint32_t aggregators() const noexcept { return aggregators_; }
  double per_aggregator_data() const noexcept { return per_aggregator_data_; }
  double total_data() const noexcept { return total_data_; }

  /// Size of iteration i (0-based, i < iter()).
  double msg_size_at(std::uint64_t i) const;

  TransferSchedule with_tau(double tau) const;

 private:
  TransferSchedule() = default;

  std::uint64_t iter_ = 0;
  double msg_size_ = 0.0;
  double last_msg_size_ = 0.0;
  double tau_ = 0.0;
  std::uint32_t aggregators_ = 1;
  double per_aggregator_data_ = 0.0;
  double total_data_ = 0.0;
};

/// nodes * procs_per_node * segment_count * block_size.
double total_data(const WorkloadSpec& spec);

/// Non-aggregator processes over all processes.
double estimate_tau(const WorkloadSpec& spec);

TransferSchedule derive_schedule(const WorkloadSpec& spec,
                                 std::optional<double> tau_override = {});

enum class TracePattern { SequentialWrite, ReadWriteMix, StreamingRead };

std::string_view to_string(TracePattern pattern);
TracePattern parse_trace_pattern(std::string_view text);

struct PageAccess {
  std::uint64_t page = 0;
  bool write = false;

  friend bool operator==(const PageAccess&, const PageAccess&) = default;
};

struct IoTrace {
  std::vector<PageAccess> accesses;
  double page_size_kb = 4.0;
  double working_set_mb = 0.0;
  std::uint64_t seed = 0;

  std::uint64_t page_count() const;
};

/// Synthetic page-level stand-ins for the three application classes:
///  - SequentialWrite: every page written in order, once per pass.
///  - ReadWriteMix: per pass, a write sweep then a read sweep of all pages.
///  - StreamingRead: every page read once in order; `passes` is ignored
///    because a streaming reader never revisits data.
IoTrace generate_trace(TracePattern pattern, double working_set_mb,
                       double page_size_kb, std::uint32_t passes,
                       std::uint64_t seed);

/// Text form: header `page_index,op`, then one `<index>,<R|W>` per line.
void write_trace(std::ostream& out, const IoTrace& trace);

/// working_set_mb defaults to the smallest span covering the largest index.
IoTrace read_trace(std::istream& in, double page_size_kb,
                   std::optional<double> working_set_mb = {});

}  // namespace nvmio
