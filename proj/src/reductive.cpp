#include "cwb/reductive.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "cwb/error.hpp"

namespace cwb {

namespace {

constexpr double kBracketTol = 1e-8;

// Gram-Schmidt keeping only independent directions.
std::vector<AlgebraElement> span_basis(const std::vector<AlgebraElement>& elems, double rel_tol,
                                       bool* dependent = nullptr) {
  std::vector<AlgebraElement> out;
  for (const auto& e : elems) {
    const double original = algebra_norm(e.matrix);
    CMat v = e.matrix;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : out) v -= algebra_inner(b.matrix, v) * b.matrix;
    const double norm = algebra_norm(v);
    if (original == 0.0 || norm <= rel_tol * original) {
      if (dependent) *dependent = true;
      continue;
    }
    out.push_back({v / norm});
  }
  return out;
}

double component_outside(const CMat& x, const std::vector<AlgebraElement>& basis) {
  CMat r = x;
  for (const auto& b : basis) r -= algebra_inner(b.matrix, r) * b.matrix;
  return algebra_norm(r);
}

double max_orthonormality_error(const std::vector<AlgebraElement>& basis) {
  double err = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j)
      err = std::max(err, std::abs(algebra_inner(basis[i].matrix, basis[j].matrix) - (i == j ? 1.0 : 0.0)));
  return err;
}

CMat embed(const CMat& small, int n, int offset) {
  CMat big = CMat::Zero(n, n);
  big.block(offset, offset, small.rows(), small.cols()) = small;
  return big;
}

}  // namespace

std::vector<AlgebraElement> orthonormalize(const std::vector<AlgebraElement>& elems) {
  bool dependent = false;
  auto out = span_basis(elems, 1e-8, &dependent);
  if (dependent) throw Error(ErrorKind::NotASubalgebra, "isotropy elements are linearly dependent");
  return out;
}

double bracket_closure_defect(const std::vector<AlgebraElement>& basis) {
  double defect = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      defect = std::max(defect, component_outside(bracket(basis[i].matrix, basis[j].matrix), basis));
  return defect;
}

std::vector<AlgebraElement> reductive_complement(const CompactGroupSpec& group,
                                                 const std::vector<AlgebraElement>& isotropy) {
  for (const auto& h : isotropy) {
    if (!is_in_algebra(group, h.matrix, 1e-9)) {
      throw Error(ErrorKind::NotASubalgebra, "isotropy element is not in " + group.name());
    }
  }
  const auto h = orthonormalize(isotropy);
  const double defect = bracket_closure_defect(h);
  if (defect > kBracketTol) {
    throw Error(ErrorKind::NotASubalgebra, "bracket leaves the span by " + std::to_string(defect));
  }
  std::vector<AlgebraElement> m;
  for (const auto& e : algebra_basis(group)) {
    CMat v = e.matrix;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : h) v -= algebra_inner(b.matrix, v) * b.matrix;
      for (const auto& b : m) v -= algebra_inner(b.matrix, v) * b.matrix;
    }
    const double norm = algebra_norm(v);
    if (norm > 1e-6) m.push_back({v / norm});
  }
  if (static_cast<int>(h.size() + m.size()) != group.algebra_dim()) {
    throw Error(ErrorKind::NotASubalgebra, "complement has the wrong dimension");
  }
  for (const auto& x : h)
    for (const auto& y : m)
      if (component_outside(bracket(x.matrix, y.matrix), m) > kBracketTol) {
        throw Error(ErrorKind::NotASubalgebra, "[h, m] is not contained in m");
      }
  return m;
}

HomogeneousSpaceSpec::HomogeneousSpaceSpec(CompactGroupSpec group, std::vector<AlgebraElement> isotropy,
                                           std::vector<AlgebraElement> complement,
                                           std::vector<MetricBlock> blocks)
    : group_(group), isotropy_(std::move(isotropy)), complement_(std::move(complement)),
      blocks_(std::move(blocks)) {
  if (max_orthonormality_error(isotropy_) > 1e-9 || max_orthonormality_error(complement_) > 1e-9) {
    throw Error(ErrorKind::InvalidParameter, "bases must be orthonormal");
  }
  if (static_cast<int>(isotropy_.size() + complement_.size()) != group_.algebra_dim()) {
    throw Error(ErrorKind::InvalidParameter, "h + m does not span g");
  }
  for (const auto& x : isotropy_) {
    for (const auto& y : complement_) {
      if (std::abs(algebra_inner(x.matrix, y.matrix)) > 1e-9) {
        throw Error(ErrorKind::InvalidParameter, "h is not orthogonal to m");
      }
      if (component_outside(bracket(x.matrix, y.matrix), complement_) > kBracketTol) {
        throw Error(ErrorKind::NotASubalgebra, "[h, m] is not contained in m");
      }
    }
  }
  if (bracket_closure_defect(isotropy_) > kBracketTol) {
    throw Error(ErrorKind::NotASubalgebra, "isotropy basis is not closed under bracket");
  }
  std::vector<int> seen(complement_.size(), 0);
  for (const auto& b : blocks_) {
    if (!(b.coefficient > 0.0)) throw Error(ErrorKind::InvalidCoefficients, "metric coefficients must be positive");
    std::vector<AlgebraElement> block_basis;
    for (int idx : b.indices) {
      if (idx < 0 || idx >= dim()) throw Error(ErrorKind::InvalidCoefficients, "block index out of range");
      ++seen[idx];
      block_basis.push_back(complement_[idx]);
    }
    for (const auto& x : isotropy_)
      for (const auto& y : block_basis)
        if (component_outside(bracket(x.matrix, y.matrix), block_basis) > kBracketTol) {
          throw Error(ErrorKind::InvalidCoefficients, "metric block is not ad(h)-invariant");
        }
  }
  if (std::any_of(seen.begin(), seen.end(), [](int s) { return s != 1; })) {
    throw Error(ErrorKind::InvalidCoefficients, "metric blocks must partition the complement");
  }
}

HomogeneousSpaceSpec HomogeneousSpaceSpec::normal(CompactGroupSpec group,
                                                  const std::vector<AlgebraElement>& isotropy) {
  auto m = reductive_complement(group, isotropy);
  MetricBlock block;
  for (int i = 0; i < static_cast<int>(m.size()); ++i) block.indices.push_back(i);
  std::vector<AlgebraElement> h = isotropy.empty() ? std::vector<AlgebraElement>{} : orthonormalize(isotropy);
  return HomogeneousSpaceSpec(group, std::move(h), std::move(m), {block});
}

std::vector<AlgebraElement> su_block(int n, int k) {
  if (k < 2) return {};
  std::vector<AlgebraElement> out;
  for (const auto& e : algebra_basis(CompactGroupSpec::su(k))) out.push_back({embed(e.matrix, n, 0)});
  return out;
}

std::vector<AlgebraElement> so_block(int n, int offset, int k) {
  std::vector<AlgebraElement> out;
  if (k < 2) return out;
  if (k == 2) {
    CMat x = CMat::Zero(2, 2);
    x(0, 1) = -1.0 / std::sqrt(2.0);
    x(1, 0) = 1.0 / std::sqrt(2.0);
    out.push_back({embed(x, n, offset)});
    return out;
  }
  for (const auto& e : algebra_basis(CompactGroupSpec::so(k))) out.push_back({embed(e.matrix, n, offset)});
  return out;
}

std::vector<AlgebraElement> principal_so3_in_so5() {
  const double r2 = 1.0 / std::sqrt(2.0);
  const double r6 = 1.0 / std::sqrt(6.0);
  std::vector<Eigen::Matrix3d> sym(5, Eigen::Matrix3d::Zero());
  sym[0](0, 1) = sym[0](1, 0) = r2;
  sym[1](0, 2) = sym[1](2, 0) = r2;
  sym[2](1, 2) = sym[2](2, 1) = r2;
  sym[3](0, 0) = r2;
  sym[3](1, 1) = -r2;
  sym[4](0, 0) = r6;
  sym[4](1, 1) = r6;
  sym[4](2, 2) = -2.0 * r6;

  std::vector<AlgebraElement> out;
  for (const auto& l : algebra_basis(CompactGroupSpec::so(3))) {
    const Eigen::Matrix3d lr = l.matrix.real();
    Mat rho(5, 5);
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b) rho(a, b) = (sym[a].cwiseProduct(lr * sym[b] - sym[b] * lr)).sum();
    out.push_back({rho.cast<cplx>()});
  }
  return out;
}

std::vector<AlgebraElement> su_diagonal_torus(int n) {
  std::vector<AlgebraElement> raw;
  for (int k = 0; k + 1 < n; ++k) {
    CMat x = CMat::Zero(n, n);
    x(k, k) = cplx(0.0, 1.0);
    x(k + 1, k + 1) = cplx(0.0, -1.0);
    raw.push_back({x});
  }
  return orthonormalize(raw);
}

int subalgebra_rank(const CompactGroupSpec& group, const std::vector<AlgebraElement>& basis, Rng& rng,
                    int retries) {
  const auto b = span_basis(basis, 1e-8);
  if (b.empty()) return 0;
  const auto g_basis = algebra_basis(group);
  std::normal_distribution<double> normal(0.0, 1.0);
  int best = static_cast<int>(b.size());
  for (int r = 0; r < std::max(1, retries); ++r) {
    CMat x = CMat::Zero(b[0].matrix.rows(), b[0].matrix.cols());
    for (const auto& e : b) x += normal(rng) * e.matrix;
    Mat ad(static_cast<int>(g_basis.size()), static_cast<int>(b.size()));
    for (std::size_t j = 0; j < b.size(); ++j) ad.col(static_cast<int>(j)) = algebra_coords(g_basis, bracket(x, b[j].matrix));
    best = std::min(best, static_cast<int>(null_space(ad, 1e-8, algebra_norm(x)).cols()));
  }
  return best;
}

IsotropySplitReport check_isotropy_split(const CompactGroupSpec& group,
                                         const std::vector<AlgebraElement>& h_basis,
                                         const std::vector<AlgebraElement>& n_basis, std::uint64_t seed) {
  IsotropySplitReport r;
  for (const auto& h : h_basis) {
    for (const auto& n : n_basis) {
      r.max_bracket = std::max(r.max_bracket, algebra_norm(bracket(h.matrix, n.matrix)));
      r.max_inner = std::max(r.max_inner, std::abs(algebra_inner(h.matrix, n.matrix)));
    }
  }
  r.commuting = r.max_bracket <= kBracketTol;
  r.orthogonal = r.max_inner <= kBracketTol;
  r.nontrivial = !h_basis.empty() && !n_basis.empty();
  Rng rng(seed);
  std::vector<AlgebraElement> k = h_basis;
  k.insert(k.end(), n_basis.begin(), n_basis.end());
  r.rank_k = subalgebra_rank(group, k, rng);
  r.rank_g = subalgebra_rank(group, algebra_basis(group), rng);
  r.equal_rank = r.rank_k == r.rank_g;
  return r;
}

}  // namespace cwb
