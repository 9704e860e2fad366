#include "nvmio/simulator.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>

namespace nvmio {

std::uint32_t ProcessLayout::aggregator_rank(std::uint32_t index) const {
  if (index >= aggregators()) {
    throw std::out_of_range("aggregator index out of range");
  }
  const std::uint32_t node = index / aggregators_per_node;
  const std::uint32_t slot = index % aggregators_per_node;
  return node * procs_per_node + slot;
}

void SimConfig::validate() const {
  if (layout.nodes < 1 || layout.procs_per_node < 1 ||
      layout.aggregators_per_node < 1 ||
      layout.aggregators_per_node > layout.procs_per_node) {
    throw std::invalid_argument("sim: invalid process layout");
  }
  if (layout.aggregators() != schedule.aggregators()) {
    throw std::invalid_argument(
        "sim: layout has " + std::to_string(layout.aggregators()) +
        " aggregators but the schedule was built for " +
        std::to_string(schedule.aggregators()));
  }
  for (const auto& [key, params] : link_overrides) {
    const auto [sender, aggregator] = key;
    if (sender >= layout.processes() || aggregator >= layout.aggregators()) {
      throw std::invalid_argument("sim: link override (" +
                                  std::to_string(sender) + ", " +
                                  std::to_string(aggregator) +
                                  ") references an unknown process");
    }
    if (sender == layout.aggregator_rank(aggregator)) {
      throw std::invalid_argument("sim: link override from aggregator " +
                                  std::to_string(aggregator) + " to itself");
    }
  }
  for (const auto& [iteration, size] : msg_size_overrides) {
    if (iteration >= schedule.iter()) {
      throw std::invalid_argument("sim: msg size override for iteration " +
                                  std::to_string(iteration) +
                                  " beyond the schedule");
    }
    if (!(size >= 0.0)) {
      throw std::invalid_argument("sim: msg size override must be >= 0");
    }
  }
}

namespace {

// Processor-sharing server: every admitted job progresses at
// bandwidth / active. Tracked in virtual time (MB served per job), so jobs
// admitted together finish together exactly.
class SharedDevice {
 public:
  explicit SharedDevice(double bandwidth) : bandwidth_(bandwidth) {}

  bool idle() const { return jobs_.empty(); }

  void admit(double now, std::uint32_t lane, double work_mb) {
    advance(now);
    jobs_.push({virtual_ + work_mb, lane});
  }

  double next_completion() const {
    const double remaining = jobs_.top().finish - virtual_;
    return clock_ + remaining * static_cast<double>(jobs_.size()) / bandwidth_;
  }

  /// Completes the earliest job (and any job finishing at the same virtual
  /// instant) at time `now`; returns their lanes in lane order.
  std::vector<std::uint32_t> complete(double now) {
    const double finish = jobs_.top().finish;
    clock_ = now;
    virtual_ = finish;
    std::vector<std::uint32_t> done;
    while (!jobs_.empty() && jobs_.top().finish <= finish) {
      done.push_back(jobs_.top().lane);
      jobs_.pop();
    }
    std::sort(done.begin(), done.end());
    return done;
  }

 private:
  struct Job {
    double finish;
    std::uint32_t lane;
    bool operator>(const Job& o) const {
      return std::tie(finish, lane) > std::tie(o.finish, o.lane);
    }
  };

  void advance(double now) {
    if (!jobs_.empty() && now > clock_) {
      virtual_ += (now - clock_) * bandwidth_ / static_cast<double>(jobs_.size());
      virtual_ = std::min(virtual_, jobs_.top().finish);
    }
    clock_ = std::max(clock_, now);
  }

  double bandwidth_;
  double clock_ = 0.0;
  double virtual_ = 0.0;
  std::priority_queue<Job, std::vector<Job>, std::greater<>> jobs_;
};

struct LaneState {
  std::uint64_t iteration = 0;
  double phase_start = 0.0;
};

struct TimedEvent {
  double time;
  std::uint32_t lane;
  bool operator>(const TimedEvent& o) const {
    return std::tie(time, lane) > std::tie(o.time, o.lane);
  }
};

void summarize(SimReport& report) {
  report.makespan = 0.0;
  report.shuffle_total = 0.0;
  report.io_total = 0.0;
  for (auto& lane : report.lanes) {
    lane.shuffle_total = 0.0;
    lane.io_total = 0.0;
    lane.total = 0.0;
    for (const auto& it : lane.iterations) {
      lane.shuffle_total += it.shuffle_s;
      lane.io_total += it.io_s;
      lane.total += it.shuffle_s + it.io_s;
    }
    report.makespan = std::max(report.makespan, lane.total);
    report.shuffle_total += lane.shuffle_total;
    report.io_total += lane.io_total;
  }
  const double busy = report.shuffle_total + report.io_total;
  report.shuffle_ratio = busy > 0.0 ? report.shuffle_total / busy : 0.0;
}

}  // namespace

SimReport simulate_collective(const SimConfig& config) {
  config.validate();
  const auto& layout = config.layout;
  const auto& schedule = config.schedule;
  const std::uint32_t lanes = layout.aggregators();
  const std::uint32_t processes = layout.processes();
  const double tau = schedule.tau();

  // Per aggregator: the distinct overridden links, and whether any peer
  // still uses the default coefficients. With no peers at all the exchange
  // setup is still paid once per iteration.
  std::vector<std::vector<CommParams>> overridden(lanes);
  std::vector<std::uint32_t> overridden_count(lanes, 0);
  for (const auto& [key, params] : config.link_overrides) {
    overridden[key.second].push_back(params);
    ++overridden_count[key.second];
  }
  const std::uint32_t peers = processes - 1;

  auto msg_at = [&](std::uint64_t i) {
    auto it = config.msg_size_overrides.find(i);
    return it != config.msg_size_overrides.end() ? it->second
                                                 : schedule.msg_size_at(i);
  };
  auto shuffle_duration = [&](std::uint32_t lane, double msg) {
    double slowest = 0.0;
    if (peers == 0 || overridden_count[lane] < peers) {
      slowest = transfer_time(config.comm, msg, tau);
    }
    for (const auto& link : overridden[lane]) {
      slowest = std::max(slowest, transfer_time(link, msg, tau));
    }
    return slowest;
  };

  SimReport report;
  report.lanes.resize(lanes);
  for (std::uint32_t a = 0; a < lanes; ++a) {
    report.lanes[a].id = a;
    report.lanes[a].rank = layout.aggregator_rank(a);
    report.lanes[a].iterations.resize(schedule.iter());
  }
  if (schedule.iter() == 0) {
    summarize(report);
    return report;
  }

  const bool write = config.direction == Direction::Write;
  SharedDevice device(config.device.bdw_seq());
  std::priority_queue<TimedEvent, std::vector<TimedEvent>, std::greater<>>
      shuffles;
  std::vector<LaneState> state(lanes);

  auto start_shuffle = [&](std::uint32_t lane, double now) {
    auto& st = state[lane];
    const double d = shuffle_duration(lane, msg_at(st.iteration));
    report.lanes[lane].iterations[st.iteration].shuffle_s = d;
    st.phase_start = now;
    shuffles.push({now + d, lane});
  };
  auto start_io = [&](std::uint32_t lane, double now) {
    auto& st = state[lane];
    st.phase_start = now;
    device.admit(now, lane, msg_at(st.iteration));
  };
  auto start_iteration = [&](std::uint32_t lane, double now) {
    if (write) {
      start_shuffle(lane, now);
    } else {
      start_io(lane, now);
    }
  };
  auto finish_iteration = [&](std::uint32_t lane, double now) {
    if (++state[lane].iteration < schedule.iter()) {
      start_iteration(lane, now);
    }
  };

  for (std::uint32_t a = 0; a < lanes; ++a) {
    start_iteration(a, 0.0);
  }

  while (!shuffles.empty() || !device.idle()) {
    const bool io_next =
        !device.idle() &&
        (shuffles.empty() || device.next_completion() <= shuffles.top().time);
    if (io_next) {
      const double now = device.next_completion();
      for (std::uint32_t lane : device.complete(now)) {
        auto& st = state[lane];
        report.lanes[lane].iterations[st.iteration].io_s = now - st.phase_start;
        if (write) {
          finish_iteration(lane, now);
        } else {
          start_shuffle(lane, now);
        }
      }
    } else {
      const auto ev = shuffles.top();
      shuffles.pop();
      if (write) {
        start_io(ev.lane, ev.time);
      } else {
        finish_iteration(ev.lane, ev.time);
      }
    }
  }

  summarize(report);
  return report;
}

SimReport simulate_individual(double total_data_mb, std::uint32_t processes,
                              const DeviceProfile& device,
                              AccessPattern pattern) {
  if (processes < 1) {
    throw std::invalid_argument("sim: need at least one process");
  }
  if (!(total_data_mb >= 0.0)) {
    throw std::invalid_argument("sim: total data must be >= 0");
  }
  SimReport report;
  report.lanes.resize(processes);
  SharedDevice shared(device.bandwidth(pattern));
  const double share = total_data_mb / processes;
  for (std::uint32_t p = 0; p < processes; ++p) {
    report.lanes[p].id = p;
    report.lanes[p].rank = p;
    report.lanes[p].iterations.resize(1);
    shared.admit(0.0, p, share);
  }
  while (!shared.idle()) {
    const double now = shared.next_completion();
    for (std::uint32_t lane : shared.complete(now)) {
      report.lanes[lane].iterations[0].io_s = now;
    }
  }
  summarize(report);
  return report;
}

}  // namespace nvmio
