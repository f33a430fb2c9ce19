#include "cwb/profile.hpp"

#include <algorithm>
#include <limits>

namespace cwb {

DisplacementProfile DisplacementProfile::from_values(std::span<const double> values) {
  DisplacementProfile p;
  if (values.empty()) return p;
  p.min = std::numeric_limits<double>::infinity();
  p.max = -std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (double v : values) {
    p.min = std::min(p.min, v);
    p.max = std::max(p.max, v);
    sum += v;
  }
  p.samples = values.size();
  // Clamp the mean into [min, max]; summation rounding can push it out by an ulp.
  p.mean = std::clamp(sum / static_cast<double>(values.size()), p.min, p.max);
  return p;
}

}  // namespace cwb
