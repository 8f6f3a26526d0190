// The search point: total received phases theta_i, kept unwrapped.
#pragma once

#include <cstddef>
#include <vector>

#include "distbeam/channel.hpp"

namespace distbeam {

// theta_i = phi_i + psi_i, the phase arriving at the receiver from
// transmitter i. No modular reduction is applied; objectives that need one
// perform it themselves.
struct PhaseState {
  std::vector<double> theta;

  PhaseState() = default;
  explicit PhaseState(std::vector<double> t);

  std::size_t dimension() const { return theta.size(); }

  bool operator==(const PhaseState&) const = default;
};

// Beamformer phases psi_i = theta_i - phi_i each transmitter would apply to
// realize this state over the given channel.
std::vector<double> beamformer_phases(const PhaseState& state,
                                      const ChannelRealization& channel);

}  // namespace distbeam
