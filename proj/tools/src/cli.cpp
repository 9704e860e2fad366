#include "nvmio/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "nvmio/commnet.hpp"
#include "nvmio/config.hpp"
#include "nvmio/costmodel.hpp"
#include "nvmio/error.hpp"
#include "nvmio/fixtures.hpp"
#include "nvmio/page_cache.hpp"
#include "nvmio/serialize.hpp"
#include "nvmio/simulator.hpp"

namespace nvmio::cli {

namespace {

using nlohmann::json;

enum class Format { Table, Json, Csv };

Format parse_format(const std::string& text) {
  if (text == "table") return Format::Table;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + text +
                              "' (expected table, json or csv)");
}

std::string fixed(double v, int digits = 2) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

std::string percent(double fraction, int digits = 2) {
  return fixed(fraction * 100.0, digits) + "%";
}

// Left-aligned text table; first row is the header.
void print_table(std::ostream& out,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) {
        line.append(width[i] - row[i].size() + 2, ' ');
      }
    }
    out << line << '\n';
  }
}

struct Context {
  Format format = Format::Table;
  std::optional<LabConfig> config;
  std::ostream& out;
  std::ostream& err;

  const LabConfig& require_config(const char* command) const {
    if (!config) {
      throw ConfigError(std::string(command) + " needs --config PATH");
    }
    return *config;
  }

  const WorkloadSpec& require_workload(const char* command) const {
    const auto& cfg = require_config(command);
    if (!cfg.workload) {
      throw ConfigError(std::string(command) +
                        ": config has no [workload] section");
    }
    return *cfg.workload;
  }

  std::vector<DeviceProfile> devices(const std::vector<std::string>& names) const {
    std::vector<DeviceProfile> result;
    const LabConfig empty;
    const LabConfig& cfg = config ? *config : empty;
    if (names.empty()) {
      for (const auto& [name, profile] : builtin_profiles().devices) {
        result.push_back(profile);
      }
      if (cfg.device) {
        result.push_back(*cfg.device);
      }
      return result;
    }
    for (const auto& name : names) {
      result.push_back(cfg.resolve_device(name));
    }
    return result;
  }
};

// Builtin order is HDD, SSD, NVM; std::map would sort them alphabetically.
std::vector<std::string> default_device_order(const Context& ctx) {
  std::vector<std::string> names{"HDD", "SSD", "NVM"};
  if (ctx.config && ctx.config->device) {
    names.push_back(ctx.config->device->name());
  }
  return names;
}

std::vector<std::string> or_default(const Context& ctx,
                                    const std::vector<std::string>& names) {
  return names.empty() ? default_device_order(ctx) : names;
}

double resolve_tau(const Context& ctx, const WorkloadSpec& workload,
                   const std::optional<double>& flag) {
  if (flag) {
    if (!(*flag >= 0.0 && *flag <= 1.0)) {
      throw std::invalid_argument("--tau must lie in [0, 1]");
    }
    return *flag;
  }
  if (ctx.config && ctx.config->tau_override) {
    return *ctx.config->tau_override;
  }
  return estimate_tau(workload);
}

int cmd_profiles(const Context& ctx) {
  const auto devices = ctx.devices(default_device_order(ctx));
  const auto& mem = builtin_profiles().memory;
  switch (ctx.format) {
    case Format::Json: {
      json doc{{"devices", json::array()},
               {"memory",
                {{"name", "DRAM"},
                 {"read_bw_mbps", mem.read_bw()},
                 {"write_bw_mbps", mem.write_bw()}}}};
      for (const auto& d : devices) {
        doc["devices"].push_back({{"name", d.name()},
                                  {"bdw_seq_mbps", d.bdw_seq()},
                                  {"bdw_ran_mbps", d.bdw_ran()},
                                  {"builtin", is_builtin_device(d.name())}});
      }
      ctx.out << dump(doc);
      break;
    }
    case Format::Csv:
      ctx.out << "name,kind,bdw_seq_mbps,bdw_ran_mbps,read_bw_mbps,write_bw_mbps\n";
      for (const auto& d : devices) {
        ctx.out << d.name() << ",device," << format_number(d.bdw_seq()) << ','
                << format_number(d.bdw_ran()) << ",,\n";
      }
      ctx.out << "DRAM,memory,,," << format_number(mem.read_bw()) << ','
              << format_number(mem.write_bw()) << '\n';
      break;
    case Format::Table: {
      std::vector<std::vector<std::string>> rows{
          {"device", "bdw_seq (MB/s)", "bdw_ran (MB/s)"}};
      for (const auto& d : devices) {
        rows.push_back({d.name(), fixed(d.bdw_seq()), fixed(d.bdw_ran())});
      }
      print_table(ctx.out, rows);
      ctx.out << "memory DRAM: read " << fixed(mem.read_bw()) << " MB/s, write "
              << fixed(mem.write_bw()) << " MB/s\n";
      break;
    }
  }
  return kExitOk;
}

void print_schedule(const Context& ctx, const TransferSchedule& s) {
  ctx.out << "schedule: iter " << s.iter() << ", msg " << fixed(s.msg_size(), 4)
          << " MB, tau " << fixed(s.tau(), 4) << ", aggregators "
          << s.aggregators() << ", total " << fixed(s.total_data(), 2)
          << " MB\n";
}

struct PredictArgs {
  std::vector<std::string> devices;
  std::optional<double> tau;
  double t_other = 0.0;
  std::string pattern = "random";
};

int cmd_predict(const Context& ctx, const PredictArgs& a) {
  const auto& workload = ctx.require_workload("predict");
  const auto schedule =
      derive_schedule(workload, resolve_tau(ctx, workload, a.tau));
  const auto comm = ctx.config->comm_or_reference();
  const auto pattern = parse_access_pattern(a.pattern);
  std::vector<CostRow> rows;
  for (const auto& device : ctx.devices(or_default(ctx, a.devices))) {
    rows.push_back({device.name(), Strategy::Collective,
                    collective_time(schedule, comm, device, a.t_other)});
    rows.push_back({device.name(), Strategy::Individual,
                    individual_time(schedule.total_data(), device, pattern,
                                    a.t_other)});
  }
  switch (ctx.format) {
    case Format::Json: {
      json results = json::array();
      for (const auto& r : rows) {
        json item = to_json(r.cost);
        item["device"] = r.device;
        item["strategy"] = to_string(r.strategy);
        results.push_back(std::move(item));
      }
      ctx.out << dump({{"schedule", to_json(schedule)},
                       {"results", std::move(results)}});
      break;
    }
    case Format::Csv:
      write_cost_csv(ctx.out, rows);
      break;
    case Format::Table: {
      print_schedule(ctx, schedule);
      std::vector<std::vector<std::string>> table{
          {"device", "strategy", "t_comm (s)", "t_io (s)", "t_other (s)",
           "total (s)"}};
      for (const auto& r : rows) {
        table.push_back({r.device, std::string(to_string(r.strategy)),
                         fixed(r.cost.t_comm), fixed(r.cost.t_io),
                         fixed(r.cost.t_other), fixed(r.cost.total)});
      }
      print_table(ctx.out, table);
      break;
    }
  }
  return kExitOk;
}

struct DecideArgs {
  std::vector<std::string> devices;
  std::optional<double> tau;
  double t_other_collective = 0.0;
  double t_other_individual = 0.0;
  std::string pattern = "random";
};

int cmd_decide(const Context& ctx, const DecideArgs& a) {
  const auto& workload = ctx.require_workload("decide");
  const auto schedule =
      derive_schedule(workload, resolve_tau(ctx, workload, a.tau));
  const auto comm = ctx.config->comm_or_reference();
  const auto pattern = parse_access_pattern(a.pattern);
  std::vector<std::pair<std::string, Decision>> decisions;
  for (const auto& device : ctx.devices(or_default(ctx, a.devices))) {
    decisions.emplace_back(
        device.name(),
        decide(schedule, schedule.total_data(), comm, device,
               a.t_other_collective, a.t_other_individual, pattern));
  }
  switch (ctx.format) {
    case Format::Json: {
      json items = json::array();
      for (const auto& [name, d] : decisions) {
        json item = to_json(d);
        item["device"] = name;
        items.push_back(std::move(item));
      }
      ctx.out << dump({{"schedule", to_json(schedule)},
                       {"decisions", std::move(items)}});
      break;
    }
    case Format::Csv:
      ctx.out << "device,strategy,t_collective_s,t_individual_s,benefit_s\n";
      for (const auto& [name, d] : decisions) {
        ctx.out << name << ',' << to_string(d.strategy) << ','
                << format_number(d.t_collective) << ','
                << format_number(d.t_individual) << ','
                << format_number(d.benefit) << '\n';
      }
      break;
    case Format::Table: {
      print_schedule(ctx, schedule);
      std::vector<std::vector<std::string>> table{
          {"device", "strategy", "collective (s)", "individual (s)",
           "benefit (s)"}};
      for (const auto& [name, d] : decisions) {
        table.push_back({name, std::string(to_string(d.strategy)),
                         fixed(d.t_collective), fixed(d.t_individual),
                         fixed(d.benefit)});
      }
      print_table(ctx.out, table);
      break;
    }
  }
  return kExitOk;
}

struct SweepArgs {
  std::vector<std::string> sizes{"32KB", "2MB", "16MB"};
  std::vector<std::string> devices;
  std::optional<double> tau;
  std::optional<std::uint32_t> aggregators;
};

int cmd_sweep(const Context& ctx, const SweepArgs& a) {
  // Without a workload, the 4 nodes x 4 processes, one aggregator per node
  // setup: tau = 12/16.
  double tau = 0.75;
  std::uint32_t aggregators = 4;
  if (ctx.config && ctx.config->workload) {
    tau = resolve_tau(ctx, *ctx.config->workload, std::nullopt);
    aggregators = ctx.config->workload->aggregators();
  }
  if (a.tau) {
    tau = *a.tau;
  }
  if (a.aggregators) {
    aggregators = *a.aggregators;
  }
  std::vector<double> sizes;
  for (const auto& s : a.sizes) {
    sizes.push_back(parse_size_mb(s));
  }
  const auto devices = ctx.devices(or_default(ctx, a.devices));
  const auto comm = ctx.config ? ctx.config->comm_or_reference()
                               : CommParams::reference();
  const auto rows = tradeoff_sweep(sizes, comm, devices, tau, aggregators);
  switch (ctx.format) {
    case Format::Json: {
      json items = json::array();
      for (const auto& r : rows) {
        items.push_back(to_json(r));
      }
      ctx.out << dump({{"tau", tau},
                       {"aggregators", aggregators},
                       {"rows", std::move(items)}});
      break;
    }
    case Format::Csv:
      write_tradeoff_csv(ctx.out, rows);
      break;
    case Format::Table: {
      ctx.out << "one iteration, tau " << fixed(tau, 4) << ", aggregators "
              << aggregators << '\n';
      std::vector<std::vector<std::string>> table{
          {"device", "msg (MB)", "shuffle cost (s)", "benefit (s)",
           "shuffle > benefit"}};
      for (const auto& r : rows) {
        table.push_back({r.device, fixed(r.msg_size_mb, 5),
                         fixed(r.shuffle_cost, 6), fixed(r.benefit, 6),
                         r.shuffle_cost > r.benefit ? "yes" : "no"});
      }
      print_table(ctx.out, table);
      break;
    }
  }
  return kExitOk;
}

struct SimulateArgs {
  std::string device;
  std::string strategy = "collective";
  std::optional<double> tau;
  std::string pattern = "random";
  std::uint64_t seed = 0;
};

int cmd_simulate(const Context& ctx, const SimulateArgs& a) {
  const auto& workload = ctx.require_workload("simulate");
  const auto device = ctx.config->resolve_device(a.device);
  SimReport report;
  if (a.strategy == "collective") {
    const SimConfig config{
        derive_schedule(workload, resolve_tau(ctx, workload, a.tau)),
        ctx.config->comm_or_reference(),
        device,
        ProcessLayout::from(workload),
        workload.direction,
        a.seed,
        {},
        {}};
    report = simulate_collective(config);
  } else if (a.strategy == "individual") {
    report = simulate_individual(total_data(workload), workload.processes(),
                                 device, parse_access_pattern(a.pattern));
  } else {
    throw std::invalid_argument("unknown strategy '" + a.strategy +
                                "' (expected collective or individual)");
  }
  switch (ctx.format) {
    case Format::Json:
      ctx.out << dump({{"strategy", a.strategy},
                       {"device", device.name()},
                       {"seed", a.seed},
                       {"report", to_json(report)}});
      break;
    case Format::Csv:
      write_sim_csv(ctx.out, report);
      break;
    case Format::Table: {
      ctx.out << a.strategy << " on " << device.name() << ": makespan "
              << fixed(report.makespan, 4) << " s, shuffle "
              << fixed(report.shuffle_total, 4) << " s, io "
              << fixed(report.io_total, 4) << " s, shuffle share "
              << percent(report.shuffle_ratio) << '\n';
      std::vector<std::vector<std::string>> table{
          {"lane", "rank", "iterations", "shuffle (s)", "io (s)", "total (s)"}};
      for (const auto& lane : report.lanes) {
        table.push_back({std::to_string(lane.id), std::to_string(lane.rank),
                         std::to_string(lane.iterations.size()),
                         fixed(lane.shuffle_total, 4), fixed(lane.io_total, 4),
                         fixed(lane.total, 4)});
      }
      print_table(ctx.out, table);
      break;
    }
  }
  return kExitOk;
}

struct CacheArgs {
  std::string trace_path;
  std::string pattern = "read-write-mix";
  double working_set_mb = 64.0;
  std::optional<double> page_size_kb;
  std::uint32_t passes = 4;
  std::uint64_t seed = 0;
  std::optional<double> capacity_mb;
  std::vector<std::string> devices;
  bool no_flush = false;
  std::string write_trace_path;
};

int cmd_cache_sim(const Context& ctx, const CacheArgs& a) {
  CacheSettings settings;
  if (ctx.config && ctx.config->cache) {
    settings = *ctx.config->cache;
  } else if (!a.capacity_mb) {
    throw ConfigError("cache-sim needs --capacity or a [cache] section");
  }
  if (a.capacity_mb) settings.capacity_mb = *a.capacity_mb;
  if (a.page_size_kb) settings.page_size_kb = *a.page_size_kb;
  if (a.no_flush) settings.flush_at_end = false;
  const PageCacheConfig cache(settings.capacity_mb, settings.page_size_kb,
                              settings.flush_at_end);

  IoTrace trace;
  if (!a.trace_path.empty()) {
    std::ifstream in(a.trace_path);
    if (!in) {
      throw ConfigError("cannot open trace file '" + a.trace_path + "'");
    }
    trace = read_trace(in, settings.page_size_kb);
  } else {
    trace = generate_trace(parse_trace_pattern(a.pattern), a.working_set_mb,
                           settings.page_size_kb, a.passes, a.seed);
  }
  if (!a.write_trace_path.empty()) {
    std::ofstream out(a.write_trace_path);
    if (!out) {
      throw ConfigError("cannot write trace file '" + a.write_trace_path + "'");
    }
    write_trace(out, trace);
  }

  const auto& memory = builtin_profiles().memory;
  std::vector<std::pair<std::string, PageCacheResult>> results;
  for (const auto& device : ctx.devices(or_default(ctx, a.devices))) {
    results.emplace_back(device.name(),
                         simulate_page_cache(trace, cache, device, memory));
  }
  switch (ctx.format) {
    case Format::Json: {
      json items = json::array();
      for (const auto& [name, r] : results) {
        json item = to_json(r);
        item["device"] = name;
        items.push_back(std::move(item));
      }
      ctx.out << dump({{"capacity_mb", cache.effective_capacity_mb()},
                       {"page_size_kb", cache.page_size_kb()},
                       {"flush_at_end", cache.flush_at_end()},
                       {"working_set_mb", trace.working_set_mb},
                       {"results", std::move(items)}});
      break;
    }
    case Format::Csv:
      ctx.out << "device,capacity_mb,elapsed_s,accesses,hits,misses,evictions,"
                 "dirty_evictions,flushed_pages\n";
      for (const auto& [name, r] : results) {
        ctx.out << name << ',' << format_number(cache.effective_capacity_mb())
                << ',' << format_number(r.elapsed_s) << ',' << r.accesses << ','
                << r.hits << ',' << r.misses << ',' << r.evictions << ','
                << r.dirty_evictions << ',' << r.flushed_pages << '\n';
      }
      break;
    case Format::Table: {
      ctx.out << "cache " << fixed(cache.effective_capacity_mb()) << " MB ("
              << cache.capacity_pages() << " pages of "
              << fixed(cache.page_size_kb(), 0) << " KB), working set "
              << fixed(trace.working_set_mb) << " MB, "
              << trace.accesses.size() << " accesses\n";
      std::vector<std::vector<std::string>> table{
          {"device", "elapsed (s)", "hits", "misses", "evictions", "dirty",
           "flushed"}};
      for (const auto& [name, r] : results) {
        table.push_back({name, fixed(r.elapsed_s, 4), std::to_string(r.hits),
                         std::to_string(r.misses), std::to_string(r.evictions),
                         std::to_string(r.dirty_evictions),
                         std::to_string(r.flushed_pages)});
      }
      print_table(ctx.out, table);
      break;
    }
  }
  return kExitOk;
}

int cmd_calibrate(const Context& ctx, const std::string& samples_path) {
  std::ifstream in(samples_path);
  if (!in) {
    throw ConfigError("cannot open samples file '" + samples_path + "'");
  }
  const auto samples = read_calibration_csv(in);
  const auto fit = fit_comm_params(samples);
  switch (ctx.format) {
    case Format::Json:
      ctx.out << dump(to_json(fit));
      break;
    case Format::Csv:
      ctx.out << "msg_size_mb,elapsed_s,residual_s\n";
      for (std::size_t i = 0; i < samples.size(); ++i) {
        ctx.out << format_number(samples[i].msg_size_mb) << ','
                << format_number(samples[i].elapsed_s) << ','
                << format_number(fit.residuals[i]) << '\n';
      }
      break;
    case Format::Table:
      ctx.out << "t_s = " << format_number(fit.t_s) << " s\n"
              << "t_w = " << format_number(fit.t_w) << " s/MB\n"
              << "rmse = " << format_number(fit.rmse) << " s over "
              << samples.size() << " samples\n";
      for (const auto& w : fit.warnings) {
        ctx.out << "warning: " << w << '\n';
      }
      break;
  }
  if (!fit.valid) {
    ctx.err << "error: invalid calibration (fitted t_w <= 0)\n";
    return kExitValidation;
  }
  return kExitOk;
}

struct ValidateArgs {
  std::vector<std::string> zero;
  std::vector<std::string> tolerances;
  bool zero_all = false;
};

int cmd_validate(const Context& ctx, const ValidateArgs& a) {
  ValidationOptions options;
  options.zero_all = a.zero_all;
  for (const auto& id : a.zero) {
    options.tolerance_overrides[id] = 0.0;
  }
  for (const auto& spec : a.tolerances) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("--tolerance expects ID=VALUE, got '" + spec +
                                  "'");
    }
    options.tolerance_overrides[spec.substr(0, eq)] =
        std::stod(spec.substr(eq + 1));
  }
  const auto report = validate_fixtures(options);
  switch (ctx.format) {
    case Format::Json: {
      json cells = json::array();
      for (const auto& c : report.cells) {
        cells.push_back({{"fixture", c.fixture->name},
                         {"id", c.cell->id},
                         {"provenance", c.cell->provenance},
                         {"reference", to_string(c.cell->reference)},
                         {"expected", c.cell->expected},
                         {"computed", c.computed},
                         {"relative_error", c.relative_error},
                         {"tolerance", c.tolerance},
                         {"flagged", c.cell->flagged},
                         {"status", to_string(c.status)},
                         {"note", c.cell->note}});
      }
      ctx.out << dump({{"cells", std::move(cells)},
                       {"summary",
                        {{"cells", report.cells.size()},
                         {"failures", report.failures},
                         {"flagged", report.flagged},
                         {"mean_measured_error", report.mean_measured_error},
                         {"max_measured_error", report.max_measured_error},
                         {"passed", report.passed()}}}});
      break;
    }
    case Format::Csv:
      ctx.out << "fixture,id,reference,expected,computed,relative_error,"
                 "tolerance,status,provenance\n";
      for (const auto& c : report.cells) {
        ctx.out << c.fixture->name << ',' << c.cell->id << ','
                << to_string(c.cell->reference) << ','
                << format_number(c.cell->expected) << ','
                << format_number(c.computed) << ','
                << format_number(c.relative_error) << ','
                << format_number(c.tolerance) << ',' << to_string(c.status)
                << ",\"" << c.cell->provenance << "\"\n";
      }
      break;
    case Format::Table: {
      std::vector<std::vector<std::string>> table{
          {"status", "cell", "expected", "computed", "error", "tolerance",
           "source"}};
      for (const auto& c : report.cells) {
        table.push_back({std::string(to_string(c.status)), c.cell->id,
                         fixed(c.cell->expected, 4), fixed(c.computed, 4),
                         percent(c.relative_error), percent(c.tolerance),
                         c.cell->provenance});
      }
      print_table(ctx.out, table);
      for (const auto& c : report.cells) {
        if (!c.cell->note.empty() && c.status != CellStatus::Pass) {
          ctx.out << "note " << c.cell->id << ": " << c.cell->note << '\n';
        }
      }
      ctx.out << report.cells.size() << " cells, " << report.failures
              << " failed, " << report.flagged
              << " flagged; model vs measured: mean "
              << percent(report.mean_measured_error) << ", max "
              << percent(report.max_measured_error) << '\n';
      break;
    }
  }
  return report.passed() ? kExitOk : kExitValidation;
}

}  // namespace

double parse_size_mb(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse size '" + text + "'");
  }
  std::string unit = text.substr(used);
  std::transform(unit.begin(), unit.end(), unit.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  static const std::map<std::string, double> scale{
      {"", 1.0},          {"MB", 1.0},   {"M", 1.0},  {"KB", 1.0 / 1024.0},
      {"K", 1.0 / 1024.0}, {"GB", 1024.0}, {"G", 1024.0}};
  auto it = scale.find(unit);
  if (it == scale.end()) {
    throw std::invalid_argument("unknown size unit in '" + text + "'");
  }
  return value * it->second;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Parallel I/O performance lab for HDD/SSD/NVM block storage",
               "nvmio-lab"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_text = "table";
  if (const char* env = std::getenv("NVMIO_LAB_FORMAT"); env && *env) {
    format_text = env;
  }
  std::string config_path;
  app.add_option("--format", format_text, "Output format: table, json or csv");
  app.add_option("--config", config_path, "INI-style configuration file");

  auto* profiles = app.add_subcommand("profiles", "List device profiles");

  PredictArgs predict_args;
  auto* predict = app.add_subcommand("predict", "Model collective and individual time");
  predict->add_option("--device", predict_args.devices, "Device name (repeatable)");
  predict->add_option("--tau", predict_args.tau, "Shuffle fraction override");
  predict->add_option("--t-other", predict_args.t_other, "Residual cost (s)");
  predict->add_option("--pattern", predict_args.pattern,
                      "Individual access pattern: random or sequential");

  DecideArgs decide_args;
  auto* decide_cmd = app.add_subcommand("decide", "Choose collective or individual I/O");
  decide_cmd->add_option("--device", decide_args.devices, "Device name (repeatable)");
  decide_cmd->add_option("--tau", decide_args.tau, "Shuffle fraction override");
  decide_cmd->add_option("--t-other-collective", decide_args.t_other_collective);
  decide_cmd->add_option("--t-other-individual", decide_args.t_other_individual);
  decide_cmd->add_option("--pattern", decide_args.pattern,
                         "Individual access pattern: random or sequential");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "One-iteration shuffle cost vs benefit");
  sweep->add_option("--msg-sizes", sweep_args.sizes, "Sizes, e.g. 32KB,2MB,16MB")
      ->delimiter(',');
  sweep->add_option("--device", sweep_args.devices, "Device name (repeatable)");
  sweep->add_option("--tau", sweep_args.tau, "Shuffle fraction");
  sweep->add_option("--aggregators", sweep_args.aggregators, "Aggregator count");

  SimulateArgs sim_args;
  auto* simulate = app.add_subcommand("simulate", "Discrete-event simulation");
  simulate->add_option("--device", sim_args.device, "Device name")->required();
  simulate->add_option("--strategy", sim_args.strategy, "collective or individual");
  simulate->add_option("--tau", sim_args.tau, "Shuffle fraction override");
  simulate->add_option("--pattern", sim_args.pattern, "Individual access pattern");
  simulate->add_option("--seed", sim_args.seed, "Run seed");

  CacheArgs cache_args;
  auto* cache = app.add_subcommand("cache-sim", "LRU write-back page-cache simulation");
  cache->add_option("--trace", cache_args.trace_path, "Trace file (page_index,op)");
  cache->add_option("--pattern", cache_args.pattern,
                    "sequential-write, read-write-mix or streaming-read");
  cache->add_option("--working-set", cache_args.working_set_mb, "Working set (MB)");
  cache->add_option("--page-size", cache_args.page_size_kb, "Page size (KB)");
  cache->add_option("--passes", cache_args.passes, "Passes over the working set");
  cache->add_option("--seed", cache_args.seed, "Trace seed");
  cache->add_option("--capacity", cache_args.capacity_mb, "Cache capacity (MB)");
  cache->add_option("--device", cache_args.devices, "Device name (repeatable)");
  cache->add_flag("--no-flush", cache_args.no_flush, "Skip the final flush");
  cache->add_option("--write-trace", cache_args.write_trace_path,
                    "Also write the trace to this file");

  std::string samples_path;
  auto* calibrate = app.add_subcommand("calibrate", "Fit t_s and t_w from samples");
  calibrate->add_option("--samples", samples_path, "CSV msg_size_mb,elapsed_s")
      ->required();

  ValidateArgs validate_args;
  auto* validate = app.add_subcommand("validate", "Check the model against the published tables");
  validate->add_option("--zero-tolerance", validate_args.zero,
                       "Set a cell's tolerance to 0 (repeatable)");
  validate->add_option("--tolerance", validate_args.tolerances,
                       "Override a cell tolerance, ID=VALUE (repeatable)");
  validate->add_flag("--zero-all", validate_args.zero_all,
                     "Set every non-flagged tolerance to 0");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Context ctx{parse_format(format_text), std::nullopt, out, err};
    if (!config_path.empty()) {
      ctx.config = load_lab_config(config_path);
    }
    if (profiles->parsed()) return cmd_profiles(ctx);
    if (predict->parsed()) return cmd_predict(ctx, predict_args);
    if (decide_cmd->parsed()) return cmd_decide(ctx, decide_args);
    if (sweep->parsed()) return cmd_sweep(ctx, sweep_args);
    if (simulate->parsed()) return cmd_simulate(ctx, sim_args);
    if (cache->parsed()) return cmd_cache_sim(ctx, cache_args);
    if (calibrate->parsed()) return cmd_calibrate(ctx, samples_path);
    if (validate->parsed()) return cmd_validate(ctx, validate_args);
  } catch (const UnknownDeviceError& e) {
    err << "error: " << e.what() << " (known: HDD, SSD, NVM";
    err << " or the [device] section of --config)\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CalibrationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace nvmio::cli
