// Objective functions over phase states.
#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>

#include "distbeam/channel.hpp"
#include "distbeam/phase_state.hpp"

namespace distbeam {

// A deterministic function f: R^N -> R to be maximized. Only point samples
// are available to the search; nothing else about f is assumed here.
class Objective {
 public:
  virtual ~Objective() = default;

  virtual double evaluate(std::span<const double> theta) const = 0;
  double evaluate(const PhaseState& state) const {
    return evaluate(std::span<const double>(state.theta));
  }

  virtual std::size_t dimension() const = 0;

  // f(theta*) when analytically known; required by threshold stop rules.
  virtual std::optional<double> global_max_value() const = 0;

  // Stable one-line description, consumed by config fingerprints.
  virtual std::string describe() const = 0;
};

// Received SNR for N transmitters over a fixed fading channel:
//   f(theta) = P_s * | sum_i a_i exp(j theta_i) |^2 / sigma^2
// evaluated with real cosine/sine accumulation. 2pi-periodic per coordinate;
// maximized when all theta_i are equal, giving P_s (sum a_i)^2 / sigma^2.
class SnrObjective final : public Objective {
 public:
  SnrObjective(ChannelRealization channel, double signal_power, double noise_power);

  double evaluate(std::span<const double> theta) const override;
  std::size_t dimension() const override { return channel_.size(); }
  std::optional<double> global_max_value() const override;
  std::string describe() const override;

  const ChannelRealization& channel() const { return channel_; }
  double signal_power() const { return signal_power_; }
  double noise_power() const { return noise_power_; }

 private:
  ChannelRealization channel_;
  double signal_power_;
  double noise_power_;
  double gain_sum_;  // sum of a_i, accumulated in the same order evaluate() uses
};

// Separable benchmark objective
//   f(theta) = sum_i [ -((theta_i mod pi) - pi/2)^2 + (pi/2)^2 ]
// with the modulo reduced into [0, pi). Every local maximum is global; the
// maximum N (pi/2)^2 is attained iff every (theta_i mod pi) equals pi/2.
class ModPiQuadraticObjective final : public Objective {
 public:
  explicit ModPiQuadraticObjective(std::size_t dimension);

  double evaluate(std::span<const double> theta) const override;
  std::size_t dimension() const override { return dimension_; }
  std::optional<double> global_max_value() const override { return global_max_; }
  std::string describe() const override;

 private:
  std::size_t dimension_;
  double global_max_;
};

// Free-function entry points; thin wrappers over the classes above.
double evaluate_snr(const PhaseState& theta, const SnrObjective& objective);
double snr_global_max(const SnrObjective& objective);
double evaluate_mod_quadratic(const PhaseState& theta);

}  // namespace distbeam
