#include "nvmio/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <stdexcept>

#include "nvmio/error.hpp"

namespace nvmio {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

IniDocument IniDocument::parse(std::istream& in, const std::string& source) {
  IniDocument doc;
  doc.source_ = source;
  std::string raw;
  std::string current;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(raw);
    if (text.empty() || text[0] == '#' || text[0] == ';') {
      continue;
    }
    const auto where = source + ":" + std::to_string(line);
    if (text.front() == '[') {
      if (text.back() != ']' || text.size() < 3) {
        throw ConfigError(where + ": malformed section header '" + text + "'");
      }
      current = trim(std::string_view(text).substr(1, text.size() - 2));
      if (doc.sections_.contains(current)) {
        throw ConfigError(where + ": duplicate section [" + current + "]");
      }
      doc.sections_[current];
      doc.order_.push_back(current);
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(where + ": expected 'key = value', got '" + text + "'");
    }
    if (current.empty()) {
      throw ConfigError(where + ": key outside of any [section]");
    }
    const std::string key = trim(std::string_view(text).substr(0, eq));
    std::string value = trim(std::string_view(text).substr(eq + 1));
    // Trailing comments.
    for (const char marker : {'#', ';'}) {
      const auto c = value.find(marker);
      if (c != std::string::npos) {
        value = trim(std::string_view(value).substr(0, c));
      }
    }
    if (key.empty()) {
      throw ConfigError(where + ": empty key");
    }
    auto& section = doc.sections_[current];
    if (section.contains(key)) {
      throw ConfigError(where + ": duplicate key '" + key + "' in [" +
                        current + "]");
    }
    section[key] = Entry{value, line};
  }
  return doc;
}

bool IniDocument::has_section(const std::string& name) const {
  return sections_.contains(name);
}

const IniDocument::Section* IniDocument::section(const std::string& name) const {
  auto it = sections_.find(name);
  return it == sections_.end() ? nullptr : &it->second;
}

std::vector<std::string> IniDocument::section_names() const { return order_; }

namespace {

// Typed accessors over one section; every error names source:line and key.
class SectionReader {
 public:
  SectionReader(const IniDocument& doc, std::string name,
                std::set<std::string> allowed)
      : doc_(doc), name_(std::move(name)), section_(*doc.section(name_)) {
    for (const auto& [key, entry] : section_) {
      if (!allowed.contains(key)) {
        fail(entry.line, key, "unknown key");
      }
    }
  }

  bool has(const std::string& key) const { return section_.contains(key); }

  [[noreturn]] void fail(int line, const std::string& key,
                         const std::string& what) const {
    throw ConfigError(doc_.source() + ":" + std::to_string(line) + ": [" +
                      name_ + "] " + key + ": " + what);
  }

  const IniDocument::Entry& entry(const std::string& key) const {
    auto it = section_.find(key);
    if (it == section_.end()) {
      throw ConfigError(doc_.source() + ": [" + name_ + "] missing key '" +
                        key + "'");
    }
    return it->second;
  }

  std::string text(const std::string& key) const { return entry(key).value; }

  double number(const std::string& key) const {
    const auto& e = entry(key);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(e.value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != e.value.size() || !std::isfinite(v)) {
      fail(e.line, key, "'" + e.value + "' is not a number");
    }
    return v;
  }

  std::uint32_t count(const std::string& key) const {
    const auto& e = entry(key);
    const double v = number(key);
    if (v < 1.0 || v != std::floor(v) || v > 4294967295.0) {
      fail(e.line, key, "'" + e.value + "' is not a positive integer");
    }
    return static_cast<std::uint32_t>(v);
  }

  bool flag(const std::string& key) const {
    const auto& e = entry(key);
    const std::string v = lower(e.value);
    if (v == "true" || v == "1" || v == "yes" || v == "on") {
      return true;
    }
    if (v == "false" || v == "0" || v == "no" || v == "off") {
      return false;
    }
    fail(e.line, key, "'" + e.value + "' is not a boolean");
  }

  int line(const std::string& key) const { return entry(key).line; }

 private:
  const IniDocument& doc_;
  std::string name_;
  const IniDocument::Section& section_;
};

// Runs a constructor that validates with std::invalid_argument and rethrows
// as ConfigError attributed to `key`.
template <typename F>
auto checked(const SectionReader& r, const std::string& key, F&& make) {
  try {
    return make();
  } catch (const std::invalid_argument& e) {
    r.fail(r.line(key), key, e.what());
  }
}

}  // namespace

LabConfig parse_lab_config(std::istream& in, const std::string& source) {
  const IniDocument doc = IniDocument::parse(in, source);
  LabConfig cfg;

  for (const auto& name : doc.section_names()) {
    if (name != "workload" && name != "device" && name != "comm" &&
        name != "cache") {
      throw ConfigError(source + ": unknown section [" + name + "]");
    }
  }

  if (doc.has_section("workload")) {
    SectionReader r(doc, "workload",
                    {"nodes", "procs_per_node", "aggregators_per_node",
                     "segment_count", "block_size_mb", "transfer_size_mb",
                     "reorder_random", "direction", "tau"});
    WorkloadSpec w;
    w.nodes = r.count("nodes");
    w.procs_per_node = r.count("procs_per_node");
    w.aggregators_per_node =
        r.has("aggregators_per_node") ? r.count("aggregators_per_node") : 1;
    w.segment_count = r.count("segment_count");
    w.block_size_mb = r.number("block_size_mb");
    w.transfer_size_mb = r.number("transfer_size_mb");
    w.reorder_random = r.has("reorder_random") && r.flag("reorder_random");
    if (r.has("direction")) {
      const std::string d = lower(r.text("direction"));
      if (d == "read") {
        w.direction = Direction::Read;
      } else if (d == "write") {
        w.direction = Direction::Write;
      } else {
        r.fail(r.line("direction"), "direction",
               "'" + r.text("direction") + "' is not read or write");
      }
    }
    checked(r, "nodes", [&] {
      w.validate();
      return 0;
    });
    cfg.workload = w;
    if (r.has("tau")) {
      const double tau = r.number("tau");
      if (!(tau >= 0.0 && tau <= 1.0)) {
        r.fail(r.line("tau"), "tau", "must lie in [0, 1]");
      }
      cfg.tau_override = tau;
    }
  }

  if (doc.has_section("device")) {
    SectionReader r(doc, "device", {"name", "bdw_seq_mbps", "bdw_ran_mbps"});
    const std::string name = r.text("name");
    if (is_builtin_device(name)) {
      r.fail(r.line("name"), "name",
             "'" + name + "' is a reserved builtin device name");
    }
    const double seq = r.number("bdw_seq_mbps");
    const double ran = r.number("bdw_ran_mbps");
    cfg.device = checked(r, "bdw_ran_mbps",
                         [&] { return DeviceProfile(name, seq, ran); });
  }

  if (doc.has_section("comm")) {
    SectionReader r(doc, "comm", {"t_s_s", "t_w_s_per_mb"});
    const double ts = r.number("t_s_s");
    const double tw = r.number("t_w_s_per_mb");
    cfg.comm = checked(r, "t_w_s_per_mb", [&] { return CommParams(ts, tw); });
  }

  if (doc.has_section("cache")) {
    SectionReader r(doc, "cache", {"capacity_mb", "page_size_kb", "flush_at_end"});
    CacheSettings c;
    c.capacity_mb = r.number("capacity_mb");
    if (c.capacity_mb < 0.0) {
      r.fail(r.line("capacity_mb"), "capacity_mb", "must be >= 0");
    }
    if (r.has("page_size_kb")) {
      c.page_size_kb = r.number("page_size_kb");
      if (!(c.page_size_kb > 0.0)) {
        r.fail(r.line("page_size_kb"), "page_size_kb", "must be > 0");
      }
    }
    if (r.has("flush_at_end")) {
      c.flush_at_end = r.flag("flush_at_end");
    }
    cfg.cache = c;
  }
  return cfg;
}

LabConfig load_lab_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file '" + path + "'");
  }
  return parse_lab_config(in, path);
}

DeviceProfile LabConfig::resolve_device(const std::string& name) const {
  if (is_builtin_device(name)) {
    return builtin_device(name);
  }
  if (device && device->name() == name) {
    return *device;
  }
  throw UnknownDeviceError(name);
}

}  // namespace nvmio
