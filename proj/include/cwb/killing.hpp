#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "cwb/profile.hpp"
#include "cwb/reductive.hpp"

namespace cwb {

/// Relative gap (max - min) / mean at or below which a length profile is
/// declared constant.
inline constexpr double kKillingConstantTol = 1e-6;

/// Killing field on G/H generated by the action (a, n) . gH = a g n^{-1} H of
/// G x N, where N normalizes H. `left` lies in g; `right` lies in g and
/// centralizes h (zero for a pure left field).
struct KillingGenerator {
  AlgebraElement left;
  AlgebraElement right;

  static KillingGenerator left_field(const AlgebraElement& xi);
  static KillingGenerator right_field(const AlgebraElement& eta);
};

/// Norm of X in the block metric of the space (X is first projected to m).
double metric_norm(const HomogeneousSpaceSpec& space, const CMat& x);

/// Length of the field at gH: || proj_m(Ad(g^{-1}) left - right) || in the block metric.
double killing_length_at(const HomogeneousSpaceSpec& space, const KillingGenerator& gen, const GroupElement& g);

/// Lengths at Haar-sampled points. Throws ZeroField for a zero generator and
/// InvalidParameter when `right` does not centralize h.
DisplacementProfile killing_length_profile(const HomogeneousSpaceSpec& space, const KillingGenerator& gen,
                                           std::size_t samples, Rng& rng);
DisplacementProfile killing_length_profile(const HomogeneousSpaceSpec& space, const AlgebraElement& xi,
                                           std::size_t samples, Rng& rng);

/// Lengths at the given points, with the same validation.
DisplacementProfile killing_length_profile_at(const HomogeneousSpaceSpec& space, const KillingGenerator& gen,
                                              const std::vector<GroupElement>& points);

bool is_constant_length(const DisplacementProfile& profile, double tol = kKillingConstantTol);

/// Exact average of g w over a finite group of orthogonal matrices.
/// Throws ZeroVector when w = 0.
Vec center_of_gravity(const std::vector<Mat>& group, const Vec& w);

/// Monte Carlo average of g w over `samples` draws (at least 10^4) from a
/// sampler of Haar-distributed orthogonal matrices.
Vec center_of_gravity(const std::function<Mat(Rng&)>& sampler, const Vec& w, std::size_t samples, Rng& rng);

/// Monte Carlo average over Haar samples of a compact group acting by its
/// defining representation, realified for SU(n) and Sp(n).
Vec center_of_gravity(const CompactGroupSpec& group, const Vec& w, std::size_t samples, Rng& rng);

}  // namespace cwb
