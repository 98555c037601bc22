#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "mipilot/error.hpp"

namespace mipilot {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Signals are stored channel-major (one contiguous row per channel) so that
// per-channel filtering and variance updates walk memory linearly.
using SignalMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline constexpr int kMinClassId = 1;
inline constexpr int kMaxClassId = 4;

// One motor-imagery trial: channels x time samples in microvolts, plus the
// task label (1..4) when known. Rest segments carry no label.
struct EegTrial {
  SignalMatrix samples;
  double sample_rate = 0.0;
  std::optional<int> label;

  EegTrial() = default;
  EegTrial(SignalMatrix samples_in, double sample_rate_in,
           std::optional<int> label_in = std::nullopt);

  Eigen::Index channel_count() const { return samples.rows(); }
  Eigen::Index length() const { return samples.cols(); }
  double duration_seconds() const {
    return static_cast<double>(length()) / sample_rate;
  }
};

// Window descriptor over a trial: [start, start + length) advancing by
// stride samples.
struct Epoch {
  Eigen::Index start = 0;
  Eigen::Index length = 0;
  Eigen::Index stride = 1;
};

// Row-subset of a trial, preserving the order of `keep`.
EegTrial select_channels(const EegTrial& trial,
                         const std::vector<Eigen::Index>& keep);

// Number of windows of `length` advancing by `stride` that fit in `total`
// samples: floor((total - length) / stride) + 1.
Eigen::Index epoch_count(Eigen::Index total, Eigen::Index length,
                         Eigen::Index stride);

// Materialize every window as its own trial. Labels are inherited.
std::vector<EegTrial> epochs(const EegTrial& trial, Eigen::Index length,
                             Eigen::Index stride);

// Extract one window.
EegTrial slice(const EegTrial& trial, const Epoch& epoch);

}  // namespace mipilot
