#include "nvmio/devices.hpp"

#include <stdexcept>
#include <string>

#include "nvmio/error.hpp"

namespace nvmio {

std::string_view to_string(AccessPattern pattern) {
  return pattern == AccessPattern::Sequential ? "sequential" : "random";
}

AccessPattern parse_access_pattern(std::string_view text) {
  if (text == "sequential" || text == "Sequential" || text == "seq") {
    return AccessPattern::Sequential;
  }
  if (text == "random" || text == "Random" || text == "ran") {
    return AccessPattern::Random;
  }
  throw std::invalid_argument("unknown access pattern '" + std::string(text) +
                              "' (expected sequential or random)");
}

DeviceProfile::DeviceProfile(std::string name, double bdw_seq_mbps,
                             double bdw_ran_mbps)
    : name_(std::move(name)), bdw_seq_(bdw_seq_mbps), bdw_ran_(bdw_ran_mbps) {
  if (name_.empty()) {
    throw std::invalid_argument("device name must not be empty");
  }
  // Negated comparisons also reject NaN.
  if (!(bdw_seq_ > 0.0) || !(bdw_ran_ > 0.0)) {
    throw std::invalid_argument("device '" + name_ +
                                "': bandwidths must be positive");
  }
  if (bdw_ran_ > bdw_seq_) {
    throw std::invalid_argument("device '" + name_ +
                                "': random bandwidth exceeds sequential");
  }
}

MemoryProfile::MemoryProfile(double read_bw_mbps, double write_bw_mbps)
    : read_bw_(read_bw_mbps), write_bw_(write_bw_mbps) {
  if (!(read_bw_ > 0.0) || !(write_bw_ > 0.0)) {
    throw std::invalid_argument("memory bandwidths must be positive");
  }
}

const BuiltinProfiles& builtin_profiles() {
  static const BuiltinProfiles profiles = [] {
    BuiltinProfiles p{{}, MemoryProfile(1000.0, 900.0)};
    p.devices.emplace("HDD", DeviceProfile("HDD", 58.11, 26.72));
    p.devices.emplace("SSD", DeviceProfile("SSD", 110.98, 101.86));
    p.devices.emplace("NVM", DeviceProfile("NVM", 112.31, 110.51));
    return p;
  }();
  return profiles;
}

bool is_builtin_device(std::string_view name) {
  return builtin_profiles().devices.contains(name);
}

const DeviceProfile& builtin_device(std::string_view name) {
  const auto& devices = builtin_profiles().devices;
  auto it = devices.find(name);
  if (it == devices.end()) {
    throw UnknownDeviceError(std::string(name));
  }
  return it->second;
}

double service_time(const DeviceProfile& device, double size_mb,
                    AccessPattern pattern) {
  if (!(size_mb >= 0.0)) {
    throw std::invalid_argument("service_time: size must be non-negative");
  }
  return size_mb / device.bandwidth(pattern);
}

}  // namespace nvmio
