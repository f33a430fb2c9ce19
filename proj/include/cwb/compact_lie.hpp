#pragma once

#include <string>
#include <vector>

#include "cwb/linalg.hpp"
#include "cwb/profile.hpp"

namespace cwb {

enum class LieFamily { SpecialUnitary, SpecialOrthogonal, CompactSymplectic };

/// A compact classical group in its defining realization: SU(n) as n x n
/// complex, SO(n) as n x n real, Sp(n) as 2n x 2n complex matrices g with
/// g J = J conj(g). All elements are stored as complex matrices.
///
/// Metric normalization is <X, Y> = -Re tr(XY) in the defining
/// representation. The Killing form is B(X, Y) = 2n tr(XY) on su(n),
/// (n - 2) tr(XY) on so(n) and 2(n + 1) tr(XY) on sp(n) (2n x 2n realization),
/// so distances here are 1/sqrt(2n), 1/sqrt(n - 2) and 1/sqrt(2(n + 1)) times
/// the Killing-form distances respectively.
struct CompactGroupSpec {
  LieFamily family = LieFamily::SpecialUnitary;
  int size = 2;

  CompactGroupSpec(LieFamily f, int n);

  static CompactGroupSpec su(int n) { return {LieFamily::SpecialUnitary, n}; }
  static CompactGroupSpec so(int n) { return {LieFamily::SpecialOrthogonal, n}; }
  static CompactGroupSpec sp(int n) { return {LieFamily::CompactSymplectic, n}; }

  int matrix_dim() const { return family == LieFamily::CompactSymplectic ? 2 * size : size; }
  int algebra_dim() const;
  int rank() const;
  std::string name() const;

  bool operator==(const CompactGroupSpec&) const = default;
};

struct GroupElement {
  CMat matrix;
};

struct AlgebraElement {
  CMat matrix;
};

/// <X, Y> = -Re tr(XY).
double algebra_inner(const CMat& x, const CMat& y);
double algebra_norm(const CMat& x);
CMat bracket(const CMat& x, const CMat& y);

/// Throws NotInGroup unless g satisfies the family's unitarity, determinant and
/// quaternionic-structure constraints to 1e-10.
void validate_element(const CompactGroupSpec& spec, const GroupElement& g);
bool is_in_algebra(const CompactGroupSpec& spec, const CMat& x, double tol = 1e-10);

/// Projection of an arbitrary matrix onto the Lie algebra (orthogonal for the
/// real Frobenius inner product).
CMat project_to_algebra(const CompactGroupSpec& spec, const CMat& x);

/// Orthonormal basis of the Lie algebra for <X, Y> = -Re tr(XY).
std::vector<AlgebraElement> algebra_basis(const CompactGroupSpec& spec);

/// Coordinates of x in an orthonormal basis.
Vec algebra_coords(const std::vector<AlgebraElement>& basis, const CMat& x);

GroupElement identity_element(const CompactGroupSpec& spec);
GroupElement haar_element(const CompactGroupSpec& spec, Rng& rng);
GroupElement group_exp(const CompactGroupSpec& spec, const AlgebraElement& x);
/// Random algebra element with independent N(0,1) orthonormal coordinates.
AlgebraElement random_algebra_element(const CompactGroupSpec& spec, Rng& rng);

/// Bi-invariant geodesic distance d(g, h) = min ||X|| over logarithms X of
/// g^{-1} h in the Lie algebra.
double biinvariant_distance(const CompactGroupSpec& spec, const GroupElement& g, const GroupElement& h);

/// Distance from the identity to u, without validation. `shift_window` bounds
/// the 2 pi eigen-angle shifts considered for SU(n) (the trace constraint);
/// for SO(n) and Sp(n) the principal logarithm is already minimal.
double distance_from_identity(const CompactGroupSpec& spec, const CMat& u, int shift_window = 1);

/// Minimal squared norm sum (theta_k + 2 pi m_k)^2 over integer shifts m_k in
/// [-window, window] with sum_k (theta_k + 2 pi m_k) = 0.
double min_traceless_branch_norm_sq(const std::vector<double>& angles, int window);

/// x -> g1^{-1} x g2, or x -> g1 x^{-1} g2 when `inverted`.
struct TwoSidedIsometry {
  GroupElement g1;
  GroupElement g2;
  bool inverted = false;

  CMat apply(const CMat& x) const;
};

double translation_displacement(const CompactGroupSpec& spec, const TwoSidedIsometry& iso,
                                const GroupElement& x);

/// Center of the group: SU(n) scalars exp(2 pi i k/n), SO(2m) {+-I},
/// SO(2m+1) {I}, Sp(n) {+-I}.
std::vector<GroupElement> center_elements(const CompactGroupSpec& spec);

/// Distance from g to the nearest center element.
double distance_to_center(const CompactGroupSpec& spec, const GroupElement& g);

struct ConstancyCheck {
  bool constant = false;         // sampled gap <= tol
  DisplacementProfile profile;
  bool centrality_applicable = false;  // false for inverted isometries
  bool g1_central = false;
  bool g2_central = false;
  bool centrality_predicts_constant = false;
  bool disagreement = false;
};

/// Haar-sampled displacement profile plus the centrality cross-check: a
/// two-sided translation has constant displacement iff g1 or g2 is central.
/// Inverted isometries always have a fixed point, so they are constant only
/// when identically zero; the criterion then predicts "not constant".
ConstancyCheck is_constant_displacement_translation(const CompactGroupSpec& spec,
                                                    const TwoSidedIsometry& iso, double tol,
                                                    std::size_t samples, Rng& rng);

struct MinDisplacement {
  double value = 0.0;
  GroupElement argmin;
};

/// Multistart minimization of the displacement function: Haar starts, then
/// pattern search along one-parameter subgroups exp(t E_a) (orthonormal basis
/// plus random directions) with step halving.
MinDisplacement min_displacement(const CompactGroupSpec& spec, const TwoSidedIsometry& iso,
                                 int multistarts, int refine_steps, Rng& rng);

}  // namespace cwb
