#include "nvmio/fixtures.hpp"

#include <cmath>
#include <stdexcept>

#include "nvmio/costmodel.hpp"
#include "nvmio/simulator.hpp"

namespace nvmio {

namespace {

constexpr double kExact = 0.0;
constexpr double kReproducible = 0.005;
constexpr double kHddBandwidthGap = 0.03;
constexpr double kModelVsMeasured = 0.15;

// The 4-node HDD collective estimate implies T_IO = 273.20 s, i.e. an
// effective sequential bandwidth of about 59.97 MB/s rather than 58.11.
constexpr const char* kHddNote =
    "estimate implies bdw_seq ~59.97 MB/s (T_IO 273.20 s), not 58.11";
constexpr const char* kNvmIndividualNote =
    "published 145.88 = 16384/112.31 uses bdw_seq; random-bandwidth model "
    "gives 148.25";
constexpr const char* kTableViNote =
    "collective cells need iter=128 at tau=1; no stated parameterization "
    "reproduces them together with the 4-node table";
constexpr const char* kTableIiNote =
    "per-iteration magnitudes are not reconcilable with the stated job; "
    "ratio reported only";

std::vector<FixtureCell> bandwidth_cells() {
  std::vector<FixtureCell> cells;
  const struct {
    const char* device;
    double seq;
    double ran;
  } rows[] = {{"HDD", 58.11, 26.72}, {"SSD", 110.98, 101.86},
              {"NVM", 112.31, 110.51}};
  for (const auto& r : rows) {
    cells.push_back({std::string("tableIV.bdw_seq.") + r.device,
                     std::string("Table IV, bdw_seq (MB/s), ") + r.device,
                     Quantity::SequentialBandwidth, Reference::Parameter,
                     r.device, r.seq, kExact, false, ""});
    cells.push_back({std::string("tableIV.bdw_ran.") + r.device,
                     std::string("Table IV, bdw_ran (MB/s), ") + r.device,
                     Quantity::RandomBandwidth, Reference::Parameter, r.device,
                     r.ran, kExact, false, ""});
  }
  return cells;
}

struct Row {
  const char* device;
  double coll_estimate;
  double coll_measured;
  double indiv_estimate;
  double indiv_measured;
};

std::vector<FixtureCell> comparison_cells(const std::string& table,
                                          const std::vector<Row>& rows,
                                          bool collective_flagged) {
  std::vector<FixtureCell> cells;
  const std::string prefix = "table" + table + ".";
  const std::string title = "Table " + table + ", ";
  for (const auto& r : rows) {
    const std::string dev = r.device;
    const bool hdd = dev == "HDD";
    const bool nvm = dev == "NVM";
    const char* coll_note =
        collective_flagged ? kTableViNote : (hdd ? kHddNote : "");
    cells.push_back({prefix + "collective.estimate." + dev,
                     title + "Collective I/O estimated time (s), " + dev,
                     Quantity::CollectiveTotal, Reference::Estimate, dev,
                     r.coll_estimate, hdd ? kHddBandwidthGap : kReproducible,
                     collective_flagged, coll_note});
    cells.push_back({prefix + "collective.measured." + dev,
                     title + "Collective I/O measured time (s), " + dev,
                     Quantity::CollectiveTotal, Reference::Measured, dev,
                     r.coll_measured, kModelVsMeasured, collective_flagged,
                     collective_flagged ? kTableViNote : ""});
    cells.push_back({prefix + "individual.estimate." + dev,
                     title + "Individual I/O estimated time (s), " + dev,
                     Quantity::IndividualTotal, Reference::Estimate, dev,
                     r.indiv_estimate, kReproducible, nvm,
                     nvm ? kNvmIndividualNote : ""});
    cells.push_back({prefix + "individual.measured." + dev,
                     title + "Individual I/O measured time (s), " + dev,
                     Quantity::IndividualTotal, Reference::Measured, dev,
                     r.indiv_measured, kModelVsMeasured, false, ""});
  }
  return cells;
}

std::vector<FixtureCell> profiling_cells() {
  std::vector<FixtureCell> cells;
  const struct {
    const char* device;
    double ratio;
  } rows[] = {{"HDD", 0.0785}, {"SSD", 0.4993}, {"NVM", 0.5016}};
  for (const auto& r : rows) {
    cells.push_back({std::string("tableII.shuffle_ratio.") + r.device,
                     std::string("Table II, ratio of shuffle time to "
                                 "collective I/O time, ") +
                         r.device,
                     Quantity::ShuffleRatio, Reference::Measured, r.device,
                     r.ratio, kModelVsMeasured, true, kTableIiNote});
  }
  return cells;
}

double compute(const Fixture& fixture, const FixtureCell& cell) {
  const DeviceProfile& device = builtin_device(cell.device);
  switch (cell.quantity) {
    case Quantity::SequentialBandwidth:
      return device.bdw_seq();
    case Quantity::RandomBandwidth:
      return device.bdw_ran();
    case Quantity::CollectiveTotal:
      return collective_time(derive_schedule(fixture.preset, fixture.tau),
                             CommParams::reference(), device)
          .total;
    case Quantity::IndividualTotal:
      return individual_time(total_data(fixture.preset), device,
                             AccessPattern::Random)
          .total;
    case Quantity::ShuffleRatio: {
      const SimConfig config{derive_schedule(fixture.preset, fixture.tau),
                             CommParams::reference(),
                             device,
                             ProcessLayout::from(fixture.preset),
                             fixture.preset.direction,
                             0,
                             {},
                             {}};
      return simulate_collective(config).shuffle_ratio;
    }
  }
  throw std::logic_error("unhandled fixture quantity");
}

}  // namespace

std::string_view to_string(Reference reference) {
  switch (reference) {
    case Reference::Parameter:
      return "parameter";
    case Reference::Estimate:
      return "estimate";
    case Reference::Measured:
      return "measured";
  }
  return "?";
}

std::string_view to_string(CellStatus status) {
  switch (status) {
    case CellStatus::Pass:
      return "pass";
    case CellStatus::Fail:
      return "FAIL";
    case CellStatus::Flagged:
      return "flagged";
  }
  return "?";
}

WorkloadSpec four_node_preset() {
  WorkloadSpec w;
  w.nodes = 4;
  w.procs_per_node = 4;
  w.aggregators_per_node = 1;
  w.segment_count = 2;
  w.block_size_mb = 512.0;
  w.transfer_size_mb = 16.0;
  w.reorder_random = true;
  w.direction = Direction::Write;
  return w;
}

WorkloadSpec two_node_preset() {
  WorkloadSpec w = four_node_preset();
  w.nodes = 2;
  w.procs_per_node = 8;
  return w;
}

const std::vector<Fixture>& builtin_fixtures() {
  static const std::vector<Fixture> fixtures = [] {
    std::vector<Fixture> f;
    f.push_back({"bandwidths", "end-to-end device bandwidths",
                 four_node_preset(), kPresetTau, bandwidth_cells()});
    f.push_back({"four-nodes",
                 "4 compute nodes x 4 processes, 16 GB, 16 MB buffer, tau 1",
                 four_node_preset(), kPresetTau,
                 comparison_cells("V",
                                  {{"HDD", 411.78, 385.86, 613.17, 593.04},
                                   {"SSD", 286.21, 277.46, 160.84, 146.50},
                                   {"NVM", 284.46, 242.54, 145.88, 146.35}},
                                  false)});
    f.push_back({"two-nodes",
                 "2 compute nodes x 8 processes, 16 GB, 16 MB buffer, tau 1",
                 two_node_preset(), kPresetTau,
                 comparison_cells("VI",
                                  {{"HDD", 350.90, 354.59, 613.17, 580.32},
                                   {"SSD", 216.58, 217.74, 160.84, 146.40},
                                   {"NVM", 214.83, 213.01, 145.88, 146.55}},
                                  true)});
    f.push_back({"profiling", "collective I/O profile, shuffle share",
                 four_node_preset(), kPresetTau, profiling_cells()});
    return f;
  }();
  return fixtures;
}

double relative_error(double computed, double expected) {
  if (expected == 0.0) {
    return computed == 0.0 ? 0.0 : std::abs(computed);
  }
  return std::abs(computed - expected) / std::abs(expected);
}

ValidationReport validate_fixtures(const ValidationOptions& options) {
  const auto& fixtures = builtin_fixtures();
  for (const auto& [id, tol] : options.tolerance_overrides) {
    bool found = false;
    for (const auto& f : fixtures) {
      for (const auto& c : f.cells) {
        found = found || c.id == id;
      }
    }
    if (!found) {
      throw std::invalid_argument("no fixture cell named '" + id + "'");
    }
    if (!(tol >= 0.0)) {
      throw std::invalid_argument("tolerance for '" + id + "' must be >= 0");
    }
  }

  ValidationReport report;
  double measured_sum = 0.0;
  std::size_t measured_count = 0;
  for (const auto& fixture : fixtures) {
    for (const auto& cell : fixture.cells) {
      CellResult r{&fixture, &cell, compute(fixture, cell), 0.0,
                   cell.tolerance, CellStatus::Pass};
      if (auto it = options.tolerance_overrides.find(cell.id);
          it != options.tolerance_overrides.end()) {
        r.tolerance = it->second;
      }
      if (options.zero_all && !cell.flagged) {
        r.tolerance = 0.0;
      }
      r.relative_error = relative_error(r.computed, cell.expected);
      if (cell.flagged) {
        r.status = CellStatus::Flagged;
        ++report.flagged;
      } else if (r.relative_error > r.tolerance) {
        r.status = CellStatus::Fail;
        ++report.failures;
      }
      if (!cell.flagged && cell.reference == Reference::Measured) {
        measured_sum += r.relative_error;
        ++measured_count;
        report.max_measured_error =
            std::max(report.max_measured_error, r.relative_error);
      }
      report.cells.push_back(r);
    }
  }
  report.mean_measured_error =
      measured_count ? measured_sum / static_cast<double>(measured_count) : 0.0;
  return report;
}

}  // namespace nvmio
