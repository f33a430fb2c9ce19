#pragma once

#include <vector>

#include "cwb/compact_lie.hpp"

namespace cwb {

/// Orthonormal basis of su(2) for <X, Y> = -Re tr(XY): the quaternions i, j, k
/// as 2 x 2 matrices, scaled by 1/sqrt(2).
std::vector<AlgebraElement> su2_quaternion_basis();

struct BergerIsometryAlgebra {
  int dimension = 0;
  /// Basis of the algebra as coordinates in su2_quaternion_basis() (columns).
  Mat coords;
  std::vector<AlgebraElement> basis;
  /// Singular-value cutoff used for the null space.
  double cutoff = 1e-9;
};

/// {X in su(2) : ad X is skew for the inner product diag(1, b, a) in the
/// quaternion basis}: the infinitesimal isometries of the left-invariant
/// metric that act from the right. Requires 0 < a <= b <= 1
/// (InvalidCoefficients otherwise).
BergerIsometryAlgebra berger_right_isometry_algebra(double a, double b);

}  // namespace cwb
