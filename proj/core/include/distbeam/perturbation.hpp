// Random perturbation models: a probability measure plus a transformation
// mapping raw draws into candidate increments.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "distbeam/rng.hpp"

namespace distbeam {

// Axis-aligned closed box; the transformed support of a perturbation model
// when that geometry is known exactly.
struct SupportBox {
  std::vector<double> lower;
  std::vector<double> upper;

  bool operator==(const SupportBox&) const = default;
};

// Sampler for the measure mu_n plus the transformation G_n. sample() returns
// the transformed draw G_n(delta), ready to be masked and added to the
// current state. Built-ins are time-invariant boxes; custom models may vary
// with the iteration index and may declare their transformed support for the
// origin-interior check.
class PerturbationModel {
 public:
  using Sampler =
      std::function<std::vector<double>(std::uint64_t iteration, RandomEngine&)>;
  using Transform =
      std::function<std::vector<double>(std::uint64_t iteration, std::vector<double>)>;

  PerturbationModel() = default;  // invalid placeholder; dimension() == 0

  // Uniform on [-half_width, half_width]^dim with identity transformation.
  static PerturbationModel symmetric_uniform(std::size_t dim, double half_width);

  // Uniform on prod_i [-half_width + shift_i, half_width + shift_i] with
  // identity transformation.
  static PerturbationModel shifted_uniform(std::size_t dim, double half_width,
                                           std::vector<double> shift);

  // Arbitrary measure/transformation pair. Pass the transformed support when
  // the box geometry is known; otherwise the origin-interior check reports
  // undecidable.
  static PerturbationModel custom(std::size_t dim, Sampler sampler, Transform transform,
                                  std::optional<SupportBox> transformed_support,
                                  bool time_varying);

  // G_n(delta) with delta ~ mu_n.
  std::vector<double> sample(std::uint64_t iteration, RandomEngine& rng) const;

  std::optional<SupportBox> transformed_support(std::uint64_t iteration) const;
  bool time_varying() const { return time_varying_; }
  std::size_t dimension() const { return dim_; }
  std::string describe() const;

 private:
  enum class Kind { invalid, uniform, shifted_uniform, custom };

  Kind kind_ = Kind::invalid;
  std::size_t dim_ = 0;
  double half_width_ = 0.0;
  std::vector<double> shift_;
  Sampler sampler_;
  Transform transform_;
  std::optional<SupportBox> support_;
  bool time_varying_ = false;
};

std::vector<double> sample_perturbation(const PerturbationModel& model,
                                        std::uint64_t iteration, RandomEngine& rng);

// Whether a ball of positive radius around the zero vector fits inside the
// transformed support.
enum class OriginInterior { yes, no, undecidable };

OriginInterior check_origin_interior(const PerturbationModel& model,
                                     std::uint64_t iteration);

const char* to_string(OriginInterior v);

}  // namespace distbeam
