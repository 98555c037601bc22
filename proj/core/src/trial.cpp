#include "mipilot/trial.hpp"

#include <string>

namespace mipilot {

EegTrial::EegTrial(SignalMatrix samples_in, double sample_rate_in,
                   std::optional<int> label_in)
    : samples(std::move(samples_in)),
      sample_rate(sample_rate_in),
      label(label_in) {
  if (samples.rows() < 1) {
    raise(ErrorCode::InvalidSpec, "trial needs at least one channel");
  }
  if (samples.cols() < 2) {
    raise(ErrorCode::InvalidSpec, "trial needs at least two time samples");
  }
  if (!(sample_rate > 0.0)) {
    raise(ErrorCode::InvalidSpec, "sample_rate must be positive");
  }
  if (!samples.allFinite()) {
    raise(ErrorCode::InvalidSpec, "trial contains non-finite samples");
  }
  if (label && (*label < kMinClassId || *label > kMaxClassId)) {
    raise(ErrorCode::InvalidSpec,
          "label " + std::to_string(*label) + " outside 1..4");
  }
}

EegTrial select_channels(const EegTrial& trial,
                         const std::vector<Eigen::Index>& keep) {
  if (keep.empty()) {
    raise(ErrorCode::IndexOutOfRange, "channel selection is empty");
  }
  std::vector<bool> seen(static_cast<std::size_t>(trial.channel_count()), false);
  for (Eigen::Index idx : keep) {
    if (idx < 0 || idx >= trial.channel_count()) {
      raise(ErrorCode::IndexOutOfRange,
            "channel " + std::to_string(idx) + " outside 0.." +
                std::to_string(trial.channel_count() - 1));
    }
    if (seen[static_cast<std::size_t>(idx)]) {
      raise(ErrorCode::IndexOutOfRange,
            "channel " + std::to_string(idx) + " selected twice");
    }
    seen[static_cast<std::size_t>(idx)] = true;
  }

  SignalMatrix out(static_cast<Eigen::Index>(keep.size()), trial.length());
  for (std::size_t row = 0; row < keep.size(); ++row) {
    out.row(static_cast<Eigen::Index>(row)) = trial.samples.row(keep[row]);
  }
  return EegTrial(std::move(out), trial.sample_rate, trial.label);
}

Eigen::Index epoch_count(Eigen::Index total, Eigen::Index length,
                         Eigen::Index stride) {
  if (length < 2 || stride < 1) {
    raise(ErrorCode::InvalidSpec, "epoch length >= 2 and stride >= 1 required");
  }
  if (length > total) {
    raise(ErrorCode::WindowTooLong,
          "window of " + std::to_string(length) + " samples does not fit in " +
              std::to_string(total));
  }
  return (total - length) / stride + 1;
}

std::vector<EegTrial> epochs(const EegTrial& trial, Eigen::Index length,
                             Eigen::Index stride) {
  const Eigen::Index count = epoch_count(trial.length(), length, stride);
  std::vector<EegTrial> windows;
  windows.reserve(static_cast<std::size_t>(count));
  for (Eigen::Index i = 0; i < count; ++i) {
    windows.push_back(
        slice(trial, Epoch{.start = i * stride, .length = length, .stride = stride}));
  }
  return windows;
}

EegTrial slice(const EegTrial& trial, const Epoch& epoch) {
  if (epoch.length < 2 || epoch.stride < 1) {
    raise(ErrorCode::InvalidSpec, "epoch length >= 2 and stride >= 1 required");
  }
  if (epoch.start < 0 || epoch.start + epoch.length > trial.length()) {
    raise(ErrorCode::WindowTooLong, "epoch window does not fit in trial");
  }
  return EegTrial(trial.samples.middleCols(epoch.start, epoch.length),
                  trial.sample_rate, trial.label);
}

}  // namespace mipilot
