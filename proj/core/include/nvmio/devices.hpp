#pragma once

#include <map>
#include <string>
#include <string_view>

namespace nvmio {

// Sizes are MB, times are seconds, bandwidths are MB/s.

enum class AccessPattern { Sequential, Random };

std::string_view to_string(AccessPattern pattern);
AccessPattern parse_access_pattern(std::string_view text);

/// End-to-end bandwidths of one storage device as seen from a compute node.
/// Immutable; construction enforces 0 < bdw_ran <= bdw_seq.
class DeviceProfile {
 public:
  DeviceProfile(std::string name, double bdw_seq_mbps, double bdw_ran_mbps);

  const std::string& name() const noexcept { return name_; }
  double bdw_seq() const noexcept { return bdw_seq_; }
  double bdw_ran() const noexcept { return bdw_ran_; }
  double bandwidth(AccessPattern pattern) const noexcept {
    return pattern == AccessPattern::Sequential ? bdw_seq_ : bdw_ran_;
  }

  friend bool operator==(const DeviceProfile&, const DeviceProfile&) = default;

 private:
  std::string name_;
  double bdw_seq_;
  double bdw_ran_;
};

/// DRAM speed used for page-cache hits.
class MemoryProfile {
 public:
  MemoryProfile(double read_bw_mbps, double write_bw_mbps);

  double read_bw() const noexcept { return read_bw_; }
  double write_bw() const noexcept { return write_bw_; }

 private:
  double read_bw_;
  double write_bw_;
};

struct BuiltinProfiles {
  std::map<std::string, DeviceProfile, std::less<>> devices;
  MemoryProfile memory;
};

/// HDD, SSD and NVM as measured end to end on the reference platform, plus
/// the DRAM profile.
const BuiltinProfiles& builtin_profiles();

bool is_builtin_device(std::string_view name);

/// Throws UnknownDeviceError.
const DeviceProfile& builtin_device(std::string_view name);

/// Seconds to move `size_mb` at the bandwidth selected by `pattern`.
/// Throws std::invalid_argument for negative sizes.
double service_time(const DeviceProfile& device, double size_mb,
                    AccessPattern pattern);

}  // namespace nvmio
