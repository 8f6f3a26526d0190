#include "distbeam/phase_state.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace distbeam {

PhaseState::PhaseState(std::vector<double> t) : theta(std::move(t)) {
  for (const double v : theta) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("phase state: entries must be finite");
    }
  }
}

std::vector<double> beamformer_phases(const PhaseState& state,
                                      const ChannelRealization& channel) {
  if (state.dimension() != channel.size()) {
    throw std::invalid_argument("beamformer_phases: dimension mismatch");
  }
  std::vector<double> psi(state.dimension());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    psi[i] = state.theta[i] - channel.phases()[i];
  }
  return psi;
}

}  // namespace distbeam
