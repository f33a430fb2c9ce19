#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "cwb/linalg.hpp"
#include "cwb/profile.hpp"

namespace cwb {

/// Isometry of the unit sphere S^n given by an (n+1)x(n+1) orthogonal matrix.
class OrthogonalMap {
 public:
  /// Throws NonOrthogonalInput unless A^T A = I to `tol`.
  explicit OrthogonalMap(Mat matrix, double tol = 1e-10);

  const Mat& matrix() const { return matrix_; }
  int ambient_dim() const { return static_cast<int>(matrix_.rows()); }
  Vec apply(const Vec& x) const { return matrix_ * x; }
  OrthogonalMap compose(const OrthogonalMap& other) const;  // this * other
  OrthogonalMap inverse() const;

 private:
  Mat matrix_;
};

/// Geodesic distance between x and g x on the unit sphere. Computed as
/// 2 atan2(|gx - x|, |gx + x|), which equals arccos<x, gx> but keeps full
/// precision near 0 and pi. Throws NonUnitPoint unless |x| = 1 to 1e-10.
double sphere_displacement(const OrthogonalMap& g, const Vec& x);

/// Displacement profile of g over `samples` Haar-uniform points.
DisplacementProfile sphere_profile(const OrthogonalMap& g, std::size_t samples, Rng& rng);

/// Rotation angles |arg lambda| in [0, pi] of the eigenvalues of g (one per eigenvalue).
std::vector<double> eigen_rotation_angles(const OrthogonalMap& g);

struct CliffordTest {
  bool clifford = false;
  double angle = 0.0;   // constant displacement when clifford; arccos of the mean of the symmetric part otherwise
  double spread = 0.0;  // max - min of the eigen rotation angles
  double symmetric_residual = 0.0;  // max |(g + g^T)/2 - c I|
};

/// Clifford (constant displacement) test: all eigen rotation angles equal to
/// within tol, cross-checked against (g + g^T)/2 = cI. Throws NonOrthogonalInput
/// for a non-orthogonal map (construction already enforces this).
CliffordTest is_clifford_sphere(const OrthogonalMap& g, double tol);

struct FreenessResult {
  bool free = false;
  std::optional<std::size_t> offender;  // index of a non-identity element with eigenvalue +1
};

/// Every non-identity element has no eigenvalue within tol of +1. The list must
/// be closed under products to tol, otherwise NotClosed.
FreenessResult is_free_on_sphere(const std::vector<OrthogonalMap>& group, double tol);

/// Cyclic group of order k on S^{2r-1} generated by diag(R(2 pi q_1/k), ...,
/// R(2 pi q_r/k)). Throws NonCoprimeExponent if some gcd(q_i, k) != 1.
std::vector<OrthogonalMap> lens_group(int k, const std::vector<int>& exponents);

/// For a Clifford map with angle c: the minimizing great circle sigma from x to
/// g x satisfies g(sigma(t)) = sigma(t + c) at `grid` points of a full period.
/// Antipodal images use the circle through x and the first standard basis
/// vector not parallel to x. Throws NotClifford for non-constant displacement.
bool invariant_geodesic_check(const OrthogonalMap& g, const Vec& x, int grid, double tol);

// --- euclidean space ---------------------------------------------------------

struct EuclideanMotion {
  Mat rotation;     // n x n orthogonal
  Vec translation;  // n

  EuclideanMotion(Mat a, Vec b);
  Vec apply(const Vec& x) const { return rotation * x + translation; }
};

struct BoundednessEvidence {
  bool bounded = false;
  std::vector<double> radii;
  std::vector<double> sup_displacement;  // one per radius

  bool strictly_increasing() const;
  bool constant(double tol) const;
};

/// Exact verdict: bounded iff the rotation part is the identity (to 1e-10).
/// Evidence: max displacement over the sphere of each radius about the origin.
BoundednessEvidence euclidean_bounded(const EuclideanMotion& motion, const std::vector<double>& radii);

// --- real hyperbolic plane ---------------------------------------------------

/// Fractional linear map z -> (a z + b)/(c z + d) of the upper half plane.
class HyperbolicMotion {
 public:
  /// Throws InvalidParameter unless |det - 1| <= 1e-12.
  explicit HyperbolicMotion(const Eigen::Matrix2d& m);

  const Eigen::Matrix2d& matrix() const { return m_; }
  std::complex<double> apply(std::complex<double> z) const;
  bool is_identity(double tol = 1e-12) const;

 private:
  Eigen::Matrix2d m_;
};

/// Hyperbolic distance between z and m z: cosh d = 1 + |z - mz|^2 / (2 Im z Im mz).
double hyperbolic_displacement(const HyperbolicMotion& m, std::complex<double> z);

/// Point of the upper half plane at hyperbolic distance r from i in direction theta.
std::complex<double> hyperbolic_circle_point(double r, double theta);

/// Verdict bounded iff m = +-I. Evidence: sup of the displacement over the
/// closed hyperbolic ball of each radius about i (attained on its boundary, by
/// convexity of the displacement function).
BoundednessEvidence hyperbolic_bounded_probe(const HyperbolicMotion& m, const std::vector<double>& radii);

}  // namespace cwb
