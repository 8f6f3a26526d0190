// Per-transmitter fading channels: amplitude/phase pairs for N transmitters.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "distbeam/rng.hpp"

namespace distbeam {

// Fixed fading realization h_i = a_i * exp(j phi_i) for i = 1..N, stored as
// amplitude `gains[i]` (>= 0) and phase `phases[i]` (radians).
class ChannelRealization {
 public:
  ChannelRealization(std::vector<double> gains, std::vector<double> phases);

  std::size_t size() const { return gains_.size(); }
  const std::vector<double>& gains() const { return gains_; }
  const std::vector<double>& phases() const { return phases_; }

  // Hash over the raw bit patterns; identifies a realization in fingerprints.
  std::uint64_t content_hash() const;

  bool operator==(const ChannelRealization&) const = default;

 private:
  std::vector<double> gains_;
  std::vector<double> phases_;
};

// Draws n i.i.d. circularly-symmetric complex Gaussian coefficients with unit
// mean-square (real/imaginary parts independent N(0, 1/2)), returned in polar
// form: Rayleigh amplitudes with E[a^2] = 1 and phases uniform on [-pi, pi).
ChannelRealization sample_channels(std::size_t n, RandomEngine& rng);

}  // namespace distbeam
