#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cwb/cayley.hpp"
#include "cwb/quaternion.hpp"

namespace cwb {

enum class GroupFamily {
  Cyclic,
  BinaryDihedral,
  BinaryTetrahedral,
  BinaryOctahedral,
  BinaryIcosahedral,
  Unrecognized,
};

/// Classification tag. `parameter` is n for Cyclic(n), m for
/// BinaryDihedral(m), and 0 otherwise.
struct GroupType {
  GroupFamily family = GroupFamily::Unrecognized;
  int parameter = 0;

  static GroupType cyclic(int n) { return {GroupFamily::Cyclic, n}; }
  static GroupType binary_dihedral(int m) { return {GroupFamily::BinaryDihedral, m}; }
  static GroupType binary_tetrahedral() { return {GroupFamily::BinaryTetrahedral, 0}; }
  static GroupType binary_octahedral() { return {GroupFamily::BinaryOctahedral, 0}; }
  static GroupType binary_icosahedral() { return {GroupFamily::BinaryIcosahedral, 0}; }
  static GroupType unrecognized() { return {GroupFamily::Unrecognized, 0}; }

  /// Order implied by the tag (0 for Unrecognized).
  std::size_t expected_order() const;
  std::string name() const;

  bool operator==(const GroupType&) const = default;
};

/// Finite subgroup of Sp(1): deduplicated elements closed under products.
/// elements[0] is always the identity.
struct FiniteQuaternionGroup {
  std::vector<Quaternion> elements;
  std::vector<Quaternion> generators;

  std::size_t order() const { return elements.size(); }

  /// Index of the element within `tol` of q, or -1.
  int find(const Quaternion& q, double tol = 1e-9) const;

  /// Multiplication table, indices matching `elements`.
  CayleyTable cayley_table(double tol = 1e-9) const;
};

inline constexpr double kDedupTolerance = 1e-9;

/// Multiplicative closure of unit generators. Throws NonUnitGenerator for a
/// generator off the unit sphere by more than 1e-10 and ClosureExceedsLimit when
/// the group would exceed `limit` elements.
FiniteQuaternionGroup generate_closure(const std::vector<Quaternion>& generators,
                                       std::size_t limit);

/// Named constructors from explicit generators: Cyclic(n) by
/// cos(2pi/n) + sin(2pi/n) i, BinaryDihedral(m) by cos(pi/m) + sin(pi/m) i and j,
/// T* by the Hurwitz units, O* by T* and (1+i)/sqrt2, I* by the icosian pair.
FiniteQuaternionGroup named_binary_group(const GroupType& tag);

/// The exact generators behind named_binary_group for the polyhedral tags.
std::vector<ExactQuaternion> exact_generators(const GroupType& tag);

GroupType classify(const FiniteQuaternionGroup& group);
GroupType classify(const CayleyTable& table);

struct SpaceFormConstraints {
  bool abelian_subgroups_cyclic = false;  // tested on all 2-generated abelian subgroups
  bool unique_central_involution = false;  // at most one element of order 2, central
  bool odd_sylow_cyclic = false;
  std::size_t involution_count = 0;

  bool all() const { return abelian_subgroups_cyclic && unique_central_involution && odd_sylow_cyclic; }
};

SpaceFormConstraints check_space_form_constraints(const CayleyTable& table);
SpaceFormConstraints check_space_form_constraints(const FiniteQuaternionGroup& group);

/// Transpose-conjugacy property in the standard 2-dimensional unitary
/// embedding: if a and a^t are conjugate in the group then a^t is a or a^{-1}.
bool transpose_conjugacy_holds(const FiniteQuaternionGroup& group);

/// Order 120, perfect, unique involution.
bool is_sl25(const CayleyTable& table);
bool is_sl25(const FiniteQuaternionGroup& group);

/// Left-multiplication matrices of all group elements, in element order.
std::vector<Mat> left_translation_matrices(const FiniteQuaternionGroup& group);

}  // namespace cwb
