#pragma once

#include <vector>

#include "mipilot/trial.hpp"

namespace mipilot {

// Pass-band description. filter_order is the overall order of the recursive
// band-pass; it must be even because the design realizes the filter as
// filter_order/2 second-order sections derived from a Butterworth low-pass
// prototype of half the overall order.
struct BandSpec {
  double low_hz = 8.0;
  double high_hz = 30.0;
  int filter_order = 4;

  BandSpec() = default;
  BandSpec(double low, double high, int order);
};

// Names for the conventional EEG rhythm bands.
BandSpec delta_band();  //  0.5 -  3 Hz
BandSpec theta_band();  //  3.5 -  7.5 Hz
BandSpec alpha_band();  //  7.5 - 13 Hz
BandSpec beta_band();   // 14   - 38 Hz
BandSpec gamma_band();  // 25   - 55 Hz

// One second-order section. Direct form II transposed, a0 normalized to 1.
struct Biquad {
  double b0 = 0, b1 = 0, b2 = 0;
  double a1 = 0, a2 = 0;
};

// Butterworth band-pass as cascaded biquads, gain-normalized to unity at the
// geometric center of the pass band. Throws BandOutOfRange when high_hz
// reaches the Nyquist frequency.
std::vector<Biquad> design_bandpass(const BandSpec& band, double sample_rate);

// Causal multichannel filter state for streaming use. One cascade of
// second-order sections per channel; state starts at zero and persists
// across process() calls.
class StreamingBandpass {
 public:
  StreamingBandpass(const BandSpec& band, double sample_rate,
                    Eigen::Index channels);

  // Filter one sample per channel, in place.
  void process(Eigen::Ref<Vector> sample);

  double process_channel(Eigen::Index channel, double x);

  void reset();

  Eigen::Index channels() const { return channels_; }

 private:
  std::vector<Biquad> sections_;
  Eigen::Index channels_ = 0;
  // Two state words per (channel, section), channel-major.
  std::vector<double> state_;
};

// Filter every channel of a trial. zero_phase=true runs the filter forward
// and then backward (zero group delay, squared magnitude response; for
// offline training). zero_phase=false applies the causal filter exactly as
// the streaming pipeline would. Either way the ends carry the usual
// recursive-filter transient; callers that compare against analytic signals
// should discard it.
EegTrial bandpass(const EegTrial& trial, const BandSpec& band, bool zero_phase);

}  // namespace mipilot
