#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nvmio/devices.hpp"
#include "nvmio/workload.hpp"

namespace nvmio {

/// What a fixture cell recomputes.
enum class Quantity {
  SequentialBandwidth,
  RandomBandwidth,
  CollectiveTotal,
  IndividualTotal,
  ShuffleRatio,  // simulated shuffle / (shuffle + io)
};

/// Whether the expected value is the published estimate, a published
/// measurement, or a published parameter.
enum class Reference { Parameter, Estimate, Measured };

std::string_view to_string(Reference reference);

struct FixtureCell {
  std::string id;
  std::string provenance;  // table and row the expected value comes from
  Quantity quantity;
  Reference reference;
  std::string device;
  double expected;
  double tolerance;  // relative
  bool flagged;      // open question: reported, never fails
  std::string note;
};

struct Fixture {
  std::string name;
  std::string description;
  WorkloadSpec preset;
  double tau;
  std::vector<FixtureCell> cells;
};

/// Tables II, IV, V and VI with the parameters that reconstruct them.
const std::vector<Fixture>& builtin_fixtures();

/// Preset reproducing the 4-node estimates: 16 processes, one aggregator
/// per node, 16 GB in 16 MB buffers, everything shuffled (tau = 1).
WorkloadSpec four_node_preset();
WorkloadSpec two_node_preset();
inline constexpr double kPresetTau = 1.0;

enum class CellStatus { Pass, Fail, Flagged };

std::string_view to_string(CellStatus status);

struct CellResult {
  const Fixture* fixture;
  const FixtureCell* cell;
  double computed;
  double relative_error;
  double tolerance;  // after overrides
  CellStatus status;
};

struct ValidationOptions {
  /// cell id -> relative tolerance replacing the shipped one.
  std::map<std::string, double> tolerance_overrides;
  /// Replace every non-flagged tolerance with zero.
  bool zero_all = false;
};

struct ValidationReport {
  std::vector<CellResult> cells;
  std::size_t failures = 0;
  std::size_t flagged = 0;
  /// Over non-flagged measured cells.
  double mean_measured_error = 0.0;
  double max_measured_error = 0.0;

  bool passed() const { return failures == 0; }
};

/// Relative error |computed - expected| / |expected| (0 when both are 0).
double relative_error(double computed, double expected);

/// Recomputes every cell. Throws std::invalid_argument when an override
/// names an unknown cell.
ValidationReport validate_fixtures(const ValidationOptions& options = {});

}  // namespace nvmio
