#include "distbeam/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace distbeam {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

ChannelRealization::ChannelRealization(std::vector<double> gains,
                                       std::vector<double> phases)
    : gains_(std::move(gains)), phases_(std::move(phases)) {
  if (gains_.empty() || gains_.size() != phases_.size()) {
    throw std::invalid_argument("channel: gains and phases must be non-empty and equal-sized");
  }
  for (std::size_t i = 0; i < gains_.size(); ++i) {
    if (!(gains_[i] >= 0.0) || !std::isfinite(gains_[i])) {
      throw std::invalid_argument("channel: gains must be finite and non-negative");
    }
    if (!std::isfinite(phases_[i])) {
      throw std::invalid_argument("channel: phases must be finite");
    }
  }
}

std::uint64_t ChannelRealization::content_hash() const {
  std::uint64_t h = fnv1a64("channel");
  for (const double g : gains_) h = fnv1a64_append(h, g);
  for (const double p : phases_) h = fnv1a64_append(h, p);
  return h;
}

ChannelRealization sample_channels(std::size_t n, RandomEngine& rng) {
  if (n == 0) {
    throw std::invalid_argument("sample_channels: n must be >= 1");
  }
  std::vector<double> gains(n);
  std::vector<double> phases(n);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < n; ++i) {
    double z0 = 0.0;
    double z1 = 0.0;
    gaussian_pair(rng, z0, z1);
    const double re = z0 * inv_sqrt2;
    const double im = z1 * inv_sqrt2;
    gains[i] = std::hypot(re, im);
    double phi = std::atan2(im, re);  // (-pi, pi]
    if (phi == kPi) phi = -kPi;
    phases[i] = phi;
  }
  return ChannelRealization(std::move(gains), std::move(phases));
}

}  // namespace distbeam
