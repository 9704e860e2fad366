#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace nvmio {

/// Affine per-transfer communication cost: t_s + t_w * MB.
class CommParams {
 public:
  /// Throws std::invalid_argument unless t_s >= 0 and t_w > 0.
  CommParams(double t_s_seconds, double t_w_seconds_per_mb);

  /// Coefficients measured on the reference platform.
  static CommParams reference() { return CommParams(5.39e-3, 3.35e-2); }

  double t_s() const noexcept { return t_s_; }
  double t_w() const noexcept { return t_w_; }

  friend bool operator==(const CommParams&, const CommParams&) = default;

 private:
  double t_s_;
  double t_w_;
};

/// Time for one shuffle exchange that actually moves msg_size_mb * tau.
double transfer_time(const CommParams& params, double msg_size_mb, double tau);

struct CalibrationSample {
  double msg_size_mb = 0.0;
  double elapsed_s = 0.0;
};

struct CommFit {
  double t_s = 0.0;  // after clamping at zero
  double t_w = 0.0;
  double raw_t_s = 0.0;  // unclamped intercept
  std::vector<double> residuals;  // elapsed - fitted, in input order
  double rmse = 0.0;
  bool valid = false;  // false when the fitted slope is not positive
  std::vector<std::string> warnings;

  /// Throws CalibrationError if !valid.
  CommParams params() const;
};

/// Ordinary least squares of elapsed = t_s + t_w * msg_size. Throws
/// CalibrationError for fewer than two samples or a single distinct size,
/// std::invalid_argument for non-positive sample fields.
CommFit fit_comm_params(std::span<const CalibrationSample> samples);

/// Reads `msg_size_mb,elapsed_s` CSV (header mandatory). Throws ConfigError
/// naming the offending line.
std::vector<CalibrationSample> read_calibration_csv(std::istream& in);

}  // namespace nvmio
