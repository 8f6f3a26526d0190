#include "distbeam/objective.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace distbeam {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = kPi / 2.0;

// Reduce into [0, pi); negative inputs land in the canonical range too.
inline double mod_pi(double x) {
  double m = std::fmod(x, kPi);
  if (m < 0.0) m += kPi;
  return m;
}
}  // namespace

SnrObjective::SnrObjective(ChannelRealization channel, double signal_power,
                           double noise_power)
    : channel_(std::move(channel)),
      signal_power_(signal_power),
      noise_power_(noise_power),
      gain_sum_(0.0) {
  if (!(signal_power > 0.0) || !std::isfinite(signal_power)) {
    throw std::invalid_argument("snr objective: signal power must be positive");
  }
  if (!(noise_power > 0.0) || !std::isfinite(noise_power)) {
    throw std::invalid_argument("snr objective: noise power must be positive");
  }
  for (const double a : channel_.gains()) gain_sum_ += a;
}

double SnrObjective::evaluate(std::span<const double> theta) const {
  if (theta.size() != channel_.size()) {
    throw std::invalid_argument("snr objective: dimension mismatch");
  }
  const std::vector<double>& gains = channel_.gains();
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (!std::isfinite(theta[i])) {
      throw std::invalid_argument("snr objective: theta must be finite");
    }
    re += gains[i] * std::cos(theta[i]);
    im += gains[i] * std::sin(theta[i]);
  }
  return signal_power_ * (re * re + im * im) / noise_power_;
}

std::optional<double> SnrObjective::global_max_value() const {
  // Matches evaluate() at an aligned state bit-for-bit: there re equals
  // gain_sum_ (same accumulation order) and im is exactly zero.
  return signal_power_ * (gain_sum_ * gain_sum_) / noise_power_;
}

std::string SnrObjective::describe() const {
  std::ostringstream out;
  out << "snr(n=" << channel_.size() << ",ps=" << signal_power_
      << ",s2=" << noise_power_ << ",chan=" << std::hex << channel_.content_hash()
      << ")";
  return out.str();
}

ModPiQuadraticObjective::ModPiQuadraticObjective(std::size_t dimension)
    : dimension_(dimension), global_max_(0.0) {
  if (dimension == 0) {
    throw std::invalid_argument("modpi objective: dimension must be >= 1");
  }
  // Accumulated term by term, matching evaluate()'s summation order, so the
  // bound f(theta) <= global_max_ holds exactly in floating point.
  for (std::size_t i = 0; i < dimension_; ++i) global_max_ += kHalfPi * kHalfPi;
}

double ModPiQuadraticObjective::evaluate(std::span<const double> theta) const {
  if (theta.size() != dimension_) {
    throw std::invalid_argument("modpi objective: dimension mismatch");
  }
  double sum = 0.0;
  for (const double t : theta) {
    const double d = mod_pi(t) - kHalfPi;
    sum += kHalfPi * kHalfPi - d * d;
  }
  return sum;
}

std::string ModPiQuadraticObjective::describe() const {
  std::ostringstream out;
  out << "modpi(n=" << dimension_ << ")";
  return out.str();
}

double evaluate_snr(const PhaseState& theta, const SnrObjective& objective) {
  return objective.evaluate(theta);
}

double snr_global_max(const SnrObjective& objective) {
  return *objective.global_max_value();
}

double evaluate_mod_quadratic(const PhaseState& theta) {
  ModPiQuadraticObjective objective(theta.dimension());
  return objective.evaluate(theta);
}

}  // namespace distbeam
