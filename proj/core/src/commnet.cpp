#include "nvmio/commnet.hpp"

#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "nvmio/error.hpp"

namespace nvmio {

CommParams::CommParams(double t_s_seconds, double t_w_seconds_per_mb)
    : t_s_(t_s_seconds), t_w_(t_w_seconds_per_mb) {
  if (!(t_s_ >= 0.0) || !std::isfinite(t_s_)) {
    throw std::invalid_argument("t_s must be a finite value >= 0");
  }
  if (!(t_w_ > 0.0) || !std::isfinite(t_w_)) {
    throw std::invalid_argument("t_w must be a finite value > 0");
  }
}

double transfer_time(const CommParams& params, double msg_size_mb, double tau) {
  if (!(tau >= 0.0 && tau <= 1.0)) {
    throw std::invalid_argument("tau must lie in [0, 1]");
  }
  if (!(msg_size_mb >= 0.0)) {
    throw std::invalid_argument("message size must be non-negative");
  }
  return params.t_s() + params.t_w() * msg_size_mb * tau;
}

CommParams CommFit::params() const {
  if (!valid) {
    throw CalibrationError("invalid calibration: fitted t_w = " +
                           std::to_string(t_w) + " is not positive");
  }
  return CommParams(t_s, t_w);
}

CommFit fit_comm_params(std::span<const CalibrationSample> samples) {
  if (samples.size() < 2) {
    throw CalibrationError("calibration needs at least 2 samples, got " +
                           std::to_string(samples.size()));
  }
  for (const auto& s : samples) {
    if (!(s.msg_size_mb > 0.0) || !(s.elapsed_s > 0.0)) {
      throw std::invalid_argument(
          "calibration samples need msg_size > 0 and elapsed > 0");
    }
  }

  // Centered sums keep the intercept accurate when sizes are large relative
  // to it.
  const auto n = static_cast<long double>(samples.size());
  long double sum_x = 0.0L;
  long double sum_y = 0.0L;
  for (const auto& s : samples) {
    sum_x += s.msg_size_mb;
    sum_y += s.elapsed_s;
  }
  const long double mean_x = sum_x / n;
  const long double mean_y = sum_y / n;
  long double sxx = 0.0L;
  long double sxy = 0.0L;
  for (const auto& s : samples) {
    const long double dx = s.msg_size_mb - mean_x;
    sxx += dx * dx;
    sxy += dx * (s.elapsed_s - mean_y);
  }
  if (sxx <= 0.0L) {
    throw CalibrationError(
        "calibration needs at least two distinct message sizes");
  }

  const long double slope = sxy / sxx;
  const long double intercept = mean_y - slope * mean_x;

  CommFit fit;
  fit.raw_t_s = static_cast<double>(intercept);
  fit.t_w = static_cast<double>(slope);
  fit.t_s = fit.raw_t_s;
  if (fit.t_s < 0.0) {
    fit.warnings.push_back("negative intercept " + std::to_string(fit.raw_t_s) +
                           " s clamped to 0");
    fit.t_s = 0.0;
  }
  fit.valid = fit.t_w > 0.0;
  if (!fit.valid) {
    fit.warnings.push_back("fitted t_w is not positive; calibration invalid");
  }

  long double sq = 0.0L;
  fit.residuals.reserve(samples.size());
  for (const auto& s : samples) {
    const long double predicted = intercept + slope * s.msg_size_mb;
    const long double r = s.elapsed_s - predicted;
    fit.residuals.push_back(static_cast<double>(r));
    sq += r * r;
  }
  fit.rmse = static_cast<double>(std::sqrt(sq / n));
  return fit;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_field(const std::string& text, int line, const char* column) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw ConfigError("calibration CSV line " + std::to_string(line) + ": " +
                      column + " '" + text + "' is not a number");
  }
  return value;
}

}  // namespace

std::vector<CalibrationSample> read_calibration_csv(std::istream& in) {
  std::string raw;
  int line = 0;
  bool header_seen = false;
  std::vector<CalibrationSample> samples;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(raw);
    if (text.empty()) {
      continue;
    }
    if (!header_seen) {
      if (text != "msg_size_mb,elapsed_s") {
        throw ConfigError("calibration CSV line " + std::to_string(line) +
                          ": expected header 'msg_size_mb,elapsed_s'");
      }
      header_seen = true;
      continue;
    }
    const auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
      throw ConfigError("calibration CSV line " + std::to_string(line) +
                        ": expected 2 columns");
    }
    CalibrationSample s;
    s.msg_size_mb = parse_field(trim(text.substr(0, comma)), line, "msg_size_mb");
    s.elapsed_s = parse_field(trim(text.substr(comma + 1)), line, "elapsed_s");
    if (!(s.msg_size_mb > 0.0) || !(s.elapsed_s > 0.0)) {
      throw ConfigError("calibration CSV line " + std::to_string(line) +
                        ": values must be positive");
    }
    samples.push_back(s);
  }
  if (!header_seen) {
    throw ConfigError("calibration CSV is empty (header row is mandatory)");
  }
  return samples;
}

}  // namespace nvmio
