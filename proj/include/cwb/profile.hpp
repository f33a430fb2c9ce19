#pragma once

#include <cstddef>
#include <span>

namespace cwb {

/// Summary statistics of a sampled displacement (or Killing length) function.
struct DisplacementProfile {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  std::size_t samples = 0;

  double gap() const { return max - min; }
  // Zero mean only happens for the zero function, which is constant.
  double relative_gap() const { return mean > 0.0 ? gap() / mean : 0.0; }

  static DisplacementProfile from_values(std::span<const double> values);
};

}  // namespace cwb
