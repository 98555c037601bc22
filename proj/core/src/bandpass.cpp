#include "mipilot/bandpass.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace mipilot {

namespace {

constexpr double kPi = 3.14159265358979323846;

using Complex = std::complex<double>;

// Denominator coefficients of (1 - p z^-1)(1 - q z^-1) for a pole pair that
// is either complex-conjugate or both real; the product has real
// coefficients in both cases.
void pole_pair_to_denominator(Complex p, Complex q, double& a1, double& a2) {
  a1 = -(p + q).real();
  a2 = (p * q).real();
}

}  // namespace

BandSpec::BandSpec(double low, double high, int order)
    : low_hz(low), high_hz(high), filter_order(order) {
  if (!(low_hz > 0.0)) {
    raise(ErrorCode::InvalidSpec, "band low edge must be > 0 Hz");
  }
  if (!(high_hz > low_hz)) {
    raise(ErrorCode::InvalidSpec, "band high edge must exceed the low edge");
  }
  if (filter_order < 2 || filter_order % 2 != 0) {
    raise(ErrorCode::InvalidSpec, "filter_order must be a positive even integer");
  }
}

BandSpec delta_band() { return BandSpec(0.5, 3.0, 4); }
BandSpec theta_band() { return BandSpec(3.5, 7.5, 4); }
BandSpec alpha_band() { return BandSpec(7.5, 13.0, 4); }
BandSpec beta_band() { return BandSpec(14.0, 38.0, 4); }
BandSpec gamma_band() { return BandSpec(25.0, 55.0, 4); }

std::vector<Biquad> design_bandpass(const BandSpec& band, double sample_rate) {
  // Re-validate: default-constructed specs bypass the checking constructor.
  BandSpec checked(band.low_hz, band.high_hz, band.filter_order);
  const double nyquist = sample_rate / 2.0;
  if (band.high_hz >= nyquist) {
    raise(ErrorCode::BandOutOfRange,
          "band edge " + std::to_string(band.high_hz) + " Hz reaches Nyquist (" +
              std::to_string(nyquist) + " Hz)");
  }

  // Bilinear transform with pre-warped edges: analog frequency
  // W = tan(pi f / fs) makes the digital response exact at both band edges.
  const double warped_low = std::tan(kPi * band.low_hz / sample_rate);
  const double warped_high = std::tan(kPi * band.high_hz / sample_rate);
  const double center_sq = warped_low * warped_high;  // w0^2
  const double bandwidth = warped_high - warped_low;

  // Butterworth low-pass prototype of half the overall order. Each analog
  // prototype pole maps through the low-pass -> band-pass transform
  //   s -> (s^2 + w0^2) / (B s)
  // to a quadratic whose two roots are band-pass poles. The transform also
  // places one zero at s=0 and one at s=infinity per prototype pole, which
  // the bilinear transform sends to z=+1 and z=-1.
  const int prototype_order = band.filter_order / 2;
  std::vector<Complex> digital_poles;
  digital_poles.reserve(static_cast<std::size_t>(band.filter_order));
  for (int k = 1; k <= prototype_order; ++k) {
    const double angle =
        kPi * (2.0 * k + prototype_order - 1.0) / (2.0 * prototype_order);
    const Complex proto_pole(std::cos(angle), std::sin(angle));

    const Complex half = 0.5 * bandwidth * proto_pole;
    const Complex root = std::sqrt(half * half - center_sq);
    for (const Complex analog_pole : {half + root, half - root}) {
      // Bilinear map s -> z with the tan() warping convention: z = (1+s)/(1-s).
      digital_poles.push_back((1.0 + analog_pole) / (1.0 - analog_pole));
    }
  }

  // Group poles into conjugate pairs. Complex poles pair with their
  // conjugates; any real poles (possible for very wide bands) pair among
  // themselves.
  std::vector<Complex> complex_poles;
  std::vector<Complex> real_poles;
  for (const Complex& pole : digital_poles) {
    if (std::abs(pole.imag()) > 1e-12) {
      if (pole.imag() > 0.0) complex_poles.push_back(pole);
    } else {
      real_poles.push_back(Complex(pole.real(), 0.0));
    }
  }

  std::vector<Biquad> sections;
  sections.reserve(static_cast<std::size_t>(prototype_order));
  for (const Complex& pole : complex_poles) {
    Biquad section;
    section.b0 = 1.0;
    section.b1 = 0.0;
    section.b2 = -1.0;  // zeros at z = +1 and z = -1
    pole_pair_to_denominator(pole, std::conj(pole), section.a1, section.a2);
    sections.push_back(section);
  }
  for (std::size_t i = 0; i + 1 < real_poles.size(); i += 2) {
    Biquad section;
    section.b0 = 1.0;
    section.b1 = 0.0;
    section.b2 = -1.0;
    pole_pair_to_denominator(real_poles[i], real_poles[i + 1], section.a1,
                             section.a2);
    sections.push_back(section);
  }

  // Normalize overall gain to 1 at the (warped) geometric band center, with
  // the correction spread evenly across sections to keep their individual
  // gains moderate.
  const double center_digital = 2.0 * std::atan(std::sqrt(center_sq));
  const Complex z_center(std::cos(center_digital), std::sin(center_digital));
  Complex response(1.0, 0.0);
  for (const Biquad& s : sections) {
    const Complex zi = 1.0 / z_center;
    response *= (s.b0 + s.b1 * zi + s.b2 * zi * zi) /
                (1.0 + s.a1 * zi + s.a2 * zi * zi);
  }
  const double gain = std::abs(response);
  if (!(gain > 0.0) || !std::isfinite(gain)) {
    raise(ErrorCode::InvalidSpec, "degenerate band-pass design");
  }
  const double per_section =
      std::pow(1.0 / gain, 1.0 / static_cast<double>(sections.size()));
  for (Biquad& s : sections) {
    s.b0 *= per_section;
    s.b1 *= per_section;
    s.b2 *= per_section;
  }
  return sections;
}

StreamingBandpass::StreamingBandpass(const BandSpec& band, double sample_rate,
                                     Eigen::Index channels)
    : sections_(design_bandpass(band, sample_rate)), channels_(channels) {
  if (channels_ < 1) {
    raise(ErrorCode::InvalidSpec, "need at least one channel");
  }
  state_.assign(
      static_cast<std::size_t>(channels_) * sections_.size() * 2, 0.0);
}

double StreamingBandpass::process_channel(Eigen::Index channel, double x) {
  double* state =
      state_.data() + static_cast<std::size_t>(channel) * sections_.size() * 2;
  for (const Biquad& s : sections_) {
    const double y = s.b0 * x + state[0];
    state[0] = s.b1 * x - s.a1 * y + state[1];
    state[1] = s.b2 * x - s.a2 * y;
    x = y;
    state += 2;
  }
  return x;
}

void StreamingBandpass::process(Eigen::Ref<Vector> sample) {
  if (sample.size() != channels_) {
    raise(ErrorCode::ChannelMismatch,
          "sample has " + std::to_string(sample.size()) + " channels, filter " +
              std::to_string(channels_));
  }
  for (Eigen::Index ch = 0; ch < channels_; ++ch) {
    sample[ch] = process_channel(ch, sample[ch]);
  }
}

void StreamingBandpass::reset() {
  state_.assign(state_.size(), 0.0);
}

EegTrial bandpass(const EegTrial& trial, const BandSpec& band, bool zero_phase) {
  const std::vector<Biquad> sections = design_bandpass(band, trial.sample_rate);
  SignalMatrix out = trial.samples;

  const auto run_forward = [&sections](double* data, Eigen::Index n) {
    for (const Biquad& s : sections) {
      double s1 = 0.0, s2 = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        const double x = data[i];
        const double y = s.b0 * x + s1;
        s1 = s.b1 * x - s.a1 * y + s2;
        s2 = s.b2 * x - s.a2 * y;
        data[i] = y;
      }
    }
  };

  const Eigen::Index n = out.cols();
  for (Eigen::Index ch = 0; ch < out.rows(); ++ch) {
    double* row = out.row(ch).data();  // contiguous: SignalMatrix is row-major
    run_forward(row, n);
    if (zero_phase) {
      std::reverse(row, row + n);
      run_forward(row, n);
      std::reverse(row, row + n);
    }
  }
  return EegTrial(std::move(out), trial.sample_rate, trial.label);
}

}  // namespace mipilot
