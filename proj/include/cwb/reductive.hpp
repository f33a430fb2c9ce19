#pragma once

#include <vector>

#include "cwb/compact_lie.hpp"

namespace cwb {

/// Block of the complement basis (indices into complement_basis) with its
/// metric coefficient: the invariant metric is sum_blocks c_b <X, Y>|_block.
struct MetricBlock {
  std::vector<int> indices;
  double coefficient = 1.0;
};

/// Reductive homogeneous space G/H with a block-diagonal invariant metric.
/// Bases are orthonormal for <X, Y> = -Re tr(XY); h is orthogonal to m and
/// [h, m] lies in m; each metric block is ad(h)-invariant.
class HomogeneousSpaceSpec {
 public:
  /// Validates every invariant listed above (NotASubalgebra for a bracket
  /// failure, InvalidCoefficients for non-positive coefficients or
  /// blocks that are not ad(h)-invariant or do not partition m).
  HomogeneousSpaceSpec(CompactGroupSpec group, std::vector<AlgebraElement> isotropy,
                       std::vector<AlgebraElement> complement, std::vector<MetricBlock> blocks);

  /// Normal metric: complement from reductive_complement, one block, coefficient 1.
  static HomogeneousSpaceSpec normal(CompactGroupSpec group, const std::vector<AlgebraElement>& isotropy);

  const CompactGroupSpec& group() const { return group_; }
  const std::vector<AlgebraElement>& isotropy_basis() const { return isotropy_; }
  const std::vector<AlgebraElement>& complement_basis() const { return complement_; }
  const std::vector<MetricBlock>& metric_blocks() const { return blocks_; }
  int dim() const { return static_cast<int>(complement_.size()); }

 private:
  CompactGroupSpec group_;
  std::vector<AlgebraElement> isotropy_;
  std::vector<AlgebraElement> complement_;
  std::vector<MetricBlock> blocks_;
};

/// Gram-Schmidt on a list of algebra elements; throws NotASubalgebra when the
/// list is linearly dependent (relative tolerance 1e-8).
std::vector<AlgebraElement> orthonormalize(const std::vector<AlgebraElement>& elems);

/// Largest norm of the component of [X_i, X_j] outside span(basis), for an
/// orthonormal basis.
double bracket_closure_defect(const std::vector<AlgebraElement>& orthonormal_basis);

/// Orthonormal basis of the orthogonal complement m of h = span(isotropy) in g.
/// Throws NotASubalgebra when the isotropy elements are not in g, are linearly
/// dependent, or are not closed under bracket to 1e-8.
std::vector<AlgebraElement> reductive_complement(const CompactGroupSpec& group,
                                                 const std::vector<AlgebraElement>& isotropy);

// --- standard subalgebras -----------------------------------------------------

/// su(k) in the upper-left k x k block of su(n).
std::vector<AlgebraElement> su_block(int n, int k);
/// so(k) on the coordinates [offset, offset + k) of so(n).
std::vector<AlgebraElement> so_block(int n, int offset, int k);
/// The irreducible (principal) so(3) inside so(5), acting on traceless
/// symmetric 3x3 matrices.
std::vector<AlgebraElement> principal_so3_in_so5();
/// Diagonal torus of su(n).
std::vector<AlgebraElement> su_diagonal_torus(int n);

// --- isotropy splitting --------------------------------------------------------

struct IsotropySplitReport {
  bool commuting = false;   // [h, n] = 0
  bool orthogonal = false;  // h perp n
  bool nontrivial = false;  // dim h != 0 != dim n
  int rank_k = 0;           // rank of k = h + n
  int rank_g = 0;
  bool equal_rank = false;
  double max_bracket = 0.0;
  double max_inner = 0.0;

  bool conditions_hold() const { return commuting && orthogonal && nontrivial; }
};

/// Rank of the subalgebra spanned by `basis`, as the minimal centralizer
/// dimension (within the span) of random elements of the span.
int subalgebra_rank(const CompactGroupSpec& group, const std::vector<AlgebraElement>& basis, Rng& rng,
                    int retries = 4);

IsotropySplitReport check_isotropy_split(const CompactGroupSpec& group,
                                         const std::vector<AlgebraElement>& h_basis,
                                         const std::vector<AlgebraElement>& n_basis,
                                         std::uint64_t seed = 7);

}  // namespace cwb
