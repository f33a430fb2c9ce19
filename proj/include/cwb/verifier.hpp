#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cwb/compact_lie.hpp"
#include "cwb/constant_curvature.hpp"

namespace cwb {

enum class ModelKind { Sphere, GroupManifold };

/// Ambient model of M: the round sphere S^n with isometry algebra so(n+1), or
/// a compact group with a bi-invariant metric and isometry algebra l(g) + r(g).
struct Model {
  ModelKind kind = ModelKind::Sphere;
  int sphere_dim = 3;
  std::optional<CompactGroupSpec> group;
  /// False for models that are not symmetric spaces; their reports carry the
  /// instance-level-only flag.
  bool symmetric = true;

  static Model sphere(int n);
  static Model group_manifold(const CompactGroupSpec& g);

  int manifold_dim() const;
  std::string name() const;
};

/// Element of the ambient isometry algebra: X in so(n+1) for spheres (y
/// empty), or a pair (X, Y) generating x -> exp(-tX) x exp(tY) on a group.
struct AmbientVector {
  CMat x;
  CMat y;
};

double ambient_inner(const AmbientVector& a, const AmbientVector& b);

/// Orthonormal basis of the model's ambient isometry algebra.
std::vector<AmbientVector> ambient_basis(const Model& model);

using DeckElement = std::variant<OrthogonalMap, TwoSidedIsometry>;

/// Finite group of isometries of one model.
struct DeckGroup {
  std::vector<DeckElement> elements;

  static DeckGroup from_orthogonal(const std::vector<OrthogonalMap>& maps);
  static DeckGroup from_matrices(const std::vector<Mat>& mats);
  std::size_t order() const { return elements.size(); }
};

/// Ad(gamma) on the ambient algebra: gamma X gamma^T on spheres;
/// (g1^{-1} X g1, g2^{-1} Y g2) for x -> g1^{-1} x g2 and
/// (g1 Y g1^{-1}, g2^{-1} X g2) for x -> g1 x^{-1} g2.
AmbientVector adjoint_action(const DeckElement& gamma, const AmbientVector& v);

/// Throws ModelMismatch when the group's elements do not act on the model.
void check_model(const DeckGroup& group, const Model& model);

/// Orthonormal basis of {X : Ad(gamma) X = X for all gamma}, as the common null
/// space of the stacked maps Ad(gamma) - I (relative cutoff 1e-8). Throws
/// EmptyAmbient for an empty ambient basis.
std::vector<AmbientVector> centralizer_algebra(const DeckGroup& group, const std::vector<AmbientVector>& ambient);

/// Tangent vector at x of the Killing field of v, flattened to real
/// coordinates: X x on spheres, -X x + x Y on groups.
Vec killing_vector_at(const Model& model, const AmbientVector& v, const CMat& x);

struct RankEvidence {
  std::size_t points = 0;
  int min_rank = 0;
  int dim = 0;
  bool full() const { return min_rank == dim; }
};

/// Rank of the span of the fields at the base point and `random_points`
/// Haar-random points (relative cutoff 1e-8); reports the minimum.
RankEvidence transitivity_rank(const std::vector<AmbientVector>& z_basis, const Model& model,
                               std::size_t random_points, Rng& rng);

enum class Verdict { HomogeneousWitnessFound, NotConstantDisplacement, NotFree, NoWitnessInAmbient };
std::string to_string(Verdict v);

struct ElementStatus {
  std::size_t index = 0;
  bool constant = false;
  /// Constant displacement when `constant`; otherwise the mean sampled or
  /// eigen-angle value.
  double displacement = 0.0;
  /// Eigen-angle spread on spheres, sampled gap on groups.
  double gap = 0.0;
  /// Group manifolds only: whether the centrality criterion agrees.
  bool criterion_agrees = true;
};

struct VerifyConfig {
  std::uint64_t seed = 42;
  std::size_t samples = 1000;
  double tol = 1e-7;
  std::size_t rank_points = 20;
  /// Group manifolds: minimal displacement above which an element counts as
  /// fixed-point free.
  double free_tol = 1e-6;
  int multistarts = 8;
  int refine_steps = 200;
};

struct HomogeneityReport {
  std::string model;
  std::size_t group_order = 0;
  bool free = false;
  std::optional<std::size_t> fixed_point_element;
  std::vector<ElementStatus> elements;
  int centralizer_dim = 0;
  RankEvidence rank;
  Verdict verdict = Verdict::NoWitnessInAmbient;
  bool instance_level_only = false;
  bool forward_check_ran = false;
  bool forward_check_passed = false;
  double forward_max_gap = 0.0;
  VerifyConfig config;

  bool all_constant() const;
};

/// The verdict as a function of the evidence: NotFree, then
/// NotConstantDisplacement, then HomogeneousWitnessFound for full rank,
/// otherwise NoWitnessInAmbient.
Verdict derive_verdict(const HomogeneityReport& report);

/// Freeness, per-element constant displacement, centralizer and transitivity
/// rank, then (for full rank) a fresh re-sampling of every element's
/// displacement. Throws ModelMismatch, NotClosed.
HomogeneityReport verify_instance(const DeckGroup& group, const Model& model, const VerifyConfig& config = {});

}  // namespace cwb
