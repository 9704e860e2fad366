#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nvmio/commnet.hpp"
#include "nvmio/devices.hpp"
#include "nvmio/workload.hpp"

namespace nvmio {

/// Raw `[section]` / `key = value` document. Keys keep the line they came
/// from so later validation can point at it.
class IniDocument {
 public:
  struct Entry {
    std::string value;
    int line = 0;
  };
  using Section = std::map<std::string, Entry, std::less<>>;

  /// Throws ConfigError for lines that are neither sections, assignments,
  /// blanks nor `#`/`;` comments, and for duplicate keys.
  static IniDocument parse(std::istream& in, const std::string& source);

  bool has_section(const std::string& name) const;
  const Section* section(const std::string& name) const;
  const std::string& source() const noexcept { return source_; }
  std::vector<std::string> section_names() const;

 private:
  std::string source_;
  std::map<std::string, Section, std::less<>> sections_;
  std::vector<std::string> order_;
};

struct CacheSettings {
  double capacity_mb = 0.0;
  double page_size_kb = 4.0;
  bool flush_at_end = true;
};

/// Typed view of a lab configuration file. Every section is optional.
struct LabConfig {
  std::optional<WorkloadSpec> workload;
  std::optional<double> tau_override;
  std::optional<DeviceProfile> device;  // custom, non-builtin name
  std::optional<CommParams> comm;
  std::optional<CacheSettings> cache;

  /// Builtin profile by name, or the custom [device] when its name matches.
  /// Throws UnknownDeviceError.
  DeviceProfile resolve_device(const std::string& name) const;

  CommParams comm_or_reference() const {
    return comm ? *comm : CommParams::reference();
  }
};

/// Throws ConfigError with `source:line: key` context for unknown sections or
/// keys, unparsable numbers and constraint violations.
LabConfig parse_lab_config(std::istream& in, const std::string& source);
LabConfig load_lab_config(const std::string& path);

}  // namespace nvmio
