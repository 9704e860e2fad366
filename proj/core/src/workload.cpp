#include "nvmio/workload.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "nvmio/error.hpp"

namespace nvmio {

std::string_view to_string(Direction direction) {
  return direction == Direction::Read ? "read" : "write";
}

void WorkloadSpec::validate() const {
  if (nodes < 1 || procs_per_node < 1 || aggregators_per_node < 1 ||
      segment_count < 1) {
    throw std::invalid_argument(
        "workload: nodes, procs_per_node, aggregators_per_node and "
        "segment_count must all be >= 1");
  }
  if (!(block_size_mb > 0.0) || !std::isfinite(block_size_mb)) {
    throw std::invalid_argument("workload: block_size must be > 0");
  }
  if (!(transfer_size_mb > 0.0) || !std::isfinite(transfer_size_mb)) {
    throw std::invalid_argument("workload: transfer_size must be > 0");
  }
  if (aggregators_per_node > procs_per_node) {
    throw std::invalid_argument(
        "workload: aggregators_per_node exceeds procs_per_node");
  }
}

namespace {

void check_tau(double tau) {
  if (!(tau >= 0.0 && tau <= 1.0)) {
    throw std::invalid_argument("tau must lie in [0, 1]");
  }
}

}  // namespace

TransferSchedule TransferSchedule::uniform(std::uint64_t iter,
                                           double msg_size_mb, double tau,
                                           std::uint32_t aggregators) {
  if (!(msg_size_mb > 0.0)) {
    throw std::invalid_argument("schedule: msg_size must be > 0");
  }
  if (aggregators < 1) {
    throw std::invalid_argument("schedule: need at least one aggregator");
  }
  check_tau(tau);
  TransferSchedule s;
  s.iter_ = iter;
  s.msg_size_ = msg_size_mb;
  s.last_msg_size_ = msg_size_mb;
  s.tau_ = tau;
  s.aggregators_ = aggregators;
  s.per_aggregator_data_ = static_cast<double>(iter) * msg_size_mb;
  s.total_data_ = s.per_aggregator_data_ * aggregators;
  return s;
}

TransferSchedule TransferSchedule::from_volume(double per_aggregator_data_mb,
                                               double msg_size_mb, double tau,
                                               std::uint32_t aggregators) {
  if (!(per_aggregator_data_mb >= 0.0) ||
      !std::isfinite(per_aggregator_data_mb)) {
    throw std::invalid_argument("schedule: data volume must be >= 0");
  }
  TransferSchedule s = uniform(0, msg_size_mb, tau, aggregators);
  const double q = per_aggregator_data_mb / msg_size_mb;
  const double nearest = std::round(q);
  // A quotient that is an integer up to rounding noise must not grow an
  // empty tail iteration.
  const bool whole = std::abs(q - nearest) <= 1e-9 * std::max(1.0, q);
  const double iterations = whole ? nearest : std::ceil(q);
  s.iter_ = static_cast<std::uint64_t>(iterations);
  s.per_aggregator_data_ = per_aggregator_data_mb;
  s.total_data_ = per_aggregator_data_mb * aggregators;
  if (s.iter_ > 0) {
    const double tail =
        per_aggregator_data_mb - static_cast<double>(s.iter_ - 1) * msg_size_mb;
    s.last_msg_size_ = std::clamp(tail, 0.0, msg_size_mb);
    if (whole) {
      s.last_msg_size_ = msg_size_mb;
    }
  }
  return s;
}

double TransferSchedule::msg_size_at(std::uint64_t i) const {
  if (i >= iter_) {
    throw std::out_of_range("schedule: iteration index out of range");
  }
  return i + 1 == iter_ ? last_msg_size_ : msg_size_;
}

TransferSchedule TransferSchedule::with_tau(double tau) const {
  check_tau(tau);
  TransferSchedule s = *this;
  s.tau_ = tau;
  return s;
}

double total_data(const WorkloadSpec& spec) {
  spec.validate();
  return static_cast<double>(spec.nodes) * spec.procs_per_node *
         spec.segment_count * spec.block_size_mb;
}

double estimate_tau(const WorkloadSpec& spec) {
  spec.validate();
  const double p = spec.processes();
  const double a = spec.aggregators();
  return (p - a) / p;
}

TransferSchedule derive_schedule(const WorkloadSpec& spec,
                                 std::optional<double> tau_override) {
  spec.validate();
  if (tau_override) {
    check_tau(*tau_override);
  }
  const double tau = tau_override ? *tau_override : estimate_tau(spec);
  const double per_aggregator = total_data(spec) / spec.aggregators();
  return TransferSchedule::from_volume(per_aggregator, spec.transfer_size_mb,
                                       tau, spec.aggregators());
}

std::string_view to_string(TracePattern pattern) {
  switch (pattern) {
    case TracePattern::SequentialWrite:
      return "sequential-write";
    case TracePattern::ReadWriteMix:
      return "read-write-mix";
    case TracePattern::StreamingRead:
      return "streaming-read";
  }
  return "?";
}

TracePattern parse_trace_pattern(std::string_view text) {
  if (text == "sequential-write" || text == "SequentialWrite") {
    return TracePattern::SequentialWrite;
  }
  if (text == "read-write-mix" || text == "ReadWriteMix") {
    return TracePattern::ReadWriteMix;
  }
  if (text == "streaming-read" || text == "StreamingRead") {
    return TracePattern::StreamingRead;
  }
  throw std::invalid_argument(
      "unknown trace pattern '" + std::string(text) +
      "' (expected sequential-write, read-write-mix or streaming-read)");
}

std::uint64_t IoTrace::page_count() const {
  const double q = working_set_mb * 1024.0 / page_size_kb;
  const double nearest = std::round(q);
  return static_cast<std::uint64_t>(
      std::abs(q - nearest) <= 1e-9 * std::max(1.0, q) ? nearest
                                                        : std::floor(q));
}

IoTrace generate_trace(TracePattern pattern, double working_set_mb,
                       double page_size_kb, std::uint32_t passes,
                       std::uint64_t seed) {
  if (!(page_size_kb > 0.0)) {
    throw std::invalid_argument("trace: page size must be > 0");
  }
  if (!(working_set_mb * 1024.0 >= page_size_kb)) {
    throw std::invalid_argument(
        "trace: working set must hold at least one page");
  }
  if (passes < 1) {
    throw std::invalid_argument("trace: passes must be >= 1");
  }

  IoTrace trace;
  trace.page_size_kb = page_size_kb;
  trace.working_set_mb = working_set_mb;
  trace.seed = seed;
  const std::uint64_t pages = trace.page_count();

  auto sweep = [&](bool write) {
    for (std::uint64_t p = 0; p < pages; ++p) {
      trace.accesses.push_back({p, write});
    }
  };

  switch (pattern) {
    case TracePattern::SequentialWrite:
      trace.accesses.reserve(pages * passes);
      for (std::uint32_t i = 0; i < passes; ++i) {
        sweep(true);
      }
      break;
    case TracePattern::ReadWriteMix:
      trace.accesses.reserve(2 * pages * passes);
      for (std::uint32_t i = 0; i < passes; ++i) {
        sweep(true);
        sweep(false);
      }
      break;
    case TracePattern::StreamingRead:
      trace.accesses.reserve(pages);
      sweep(false);
      break;
  }
  return trace;
}

void write_trace(std::ostream& out, const IoTrace& trace) {
  out << "page_index,op\n";
  for (const auto& a : trace.accesses) {
    out << a.page << ',' << (a.write ? 'W' : 'R') << '\n';
  }
}

IoTrace read_trace(std::istream& in, double page_size_kb,
                   std::optional<double> working_set_mb) {
  if (!(page_size_kb > 0.0)) {
    throw std::invalid_argument("trace: page size must be > 0");
  }
  IoTrace trace;
  trace.page_size_kb = page_size_kb;
  std::string raw;
  int line = 0;
  std::uint64_t max_page = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') {
      raw.pop_back();
    }
    if (raw.empty() || raw == "page_index,op") {
      continue;
    }
    const auto comma = raw.find(',');
    const std::string op =
        comma == std::string::npos ? std::string() : raw.substr(comma + 1);
    if (comma == 0 || comma == std::string::npos || (op != "R" && op != "W")) {
      throw ConfigError("trace line " + std::to_string(line) +
                        ": expected '<page_index>,<R|W>'");
    }
    const std::string index = raw.substr(0, comma);
    if (index.find_first_not_of("0123456789") != std::string::npos) {
      throw ConfigError("trace line " + std::to_string(line) +
                        ": page index '" + index + "' is not an integer");
    }
    PageAccess a{std::stoull(index), op == "W"};
    max_page = std::max(max_page, a.page);
    trace.accesses.push_back(a);
  }
  const double span_mb =
      trace.accesses.empty()
          ? 0.0
          : static_cast<double>(max_page + 1) * page_size_kb / 1024.0;
  trace.working_set_mb = working_set_mb ? *working_set_mb : span_mb;
  if (!trace.accesses.empty() && max_page >= trace.page_count()) {
    throw ConfigError("trace: page index " + std::to_string(max_page) +
                      " lies outside the working set");
  }
  return trace;
}

}  // namespace nvmio
