#include "cwb/compact_lie.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "cwb/error.hpp"

namespace cwb {

CompactGroupSpec::CompactGroupSpec(LieFamily f, int n) : family(f), size(n) {
  const int min_size = f == LieFamily::SpecialOrthogonal ? 3 : 2;
  if (n < min_size) {
    throw Error(ErrorKind::InvalidParameter, "group size too small for " + name());
  }
}

int CompactGroupSpec::algebra_dim() const {
  switch (family) {
    case LieFamily::SpecialUnitary: return size * size - 1;
    case LieFamily::SpecialOrthogonal: return size * (size - 1) / 2;
    case LieFamily::CompactSymplectic: return size * (2 * size + 1);
  }
  return 0;
}

int CompactGroupSpec::rank() const {
  switch (family) {
    case LieFamily::SpecialUnitary: return size - 1;
    case LieFamily::SpecialOrthogonal: return size / 2;
    case LieFamily::CompactSymplectic: return size;
  }
  return 0;
}

std::string CompactGroupSpec::name() const {
  switch (family) {
    case LieFamily::SpecialUnitary: return "SU(" + std::to_string(size) + ")";
    case LieFamily::SpecialOrthogonal: return "SO(" + std::to_string(size) + ")";
    case LieFamily::CompactSymplectic: return "Sp(" + std::to_string(size) + ")";
  }
  return "?";
}

double algebra_inner(const CMat& x, const CMat& y) { return -(x * y).trace().real(); }
double algebra_norm(const CMat& x) { return std::sqrt(std::max(0.0, algebra_inner(x, x))); }
CMat bracket(const CMat& x, const CMat& y) { return x * y - y * x; }

void validate_element(const CompactGroupSpec& spec, const GroupElement& g) {
  const int m = spec.matrix_dim();
  const CMat& a = g.matrix;
  if (a.rows() != m || a.cols() != m) {
    throw Error(ErrorKind::NotInGroup, "matrix has the wrong size for " + spec.name());
  }
  constexpr double tol = 1e-10;
  if (max_abs(CMat(a.adjoint() * a - CMat::Identity(m, m))) > tol) {
    throw Error(ErrorKind::NotInGroup, "matrix is not unitary");
  }
  switch (spec.family) {
    case LieFamily::SpecialUnitary:
      if (std::abs(a.determinant() - cplx(1.0, 0.0)) > tol) throw Error(ErrorKind::NotInGroup, "det != 1");
      break;
    case LieFamily::SpecialOrthogonal:
      if (a.imag().cwiseAbs().maxCoeff() > tol) throw Error(ErrorKind::NotInGroup, "matrix is not real");
      if (std::abs(a.real().determinant() - 1.0) > tol) throw Error(ErrorKind::NotInGroup, "det != 1");
      break;
    case LieFamily::CompactSymplectic: {
      const CMat j = quaternionic_structure(spec.size);
      if (max_abs(CMat(a * j - j * a.conjugate())) > tol) {
        throw Error(ErrorKind::NotInGroup, "matrix does not commute with the quaternionic structure");
      }
      break;
    }
  }
}

bool is_in_algebra(const CompactGroupSpec& spec, const CMat& x, double tol) {
  const int m = spec.matrix_dim();
  if (x.rows() != m || x.cols() != m) return false;
  if (max_abs(CMat(x + x.adjoint())) > tol) return false;
  switch (spec.family) {
    case LieFamily::SpecialUnitary: return std::abs(x.trace()) <= tol;
    case LieFamily::SpecialOrthogonal: return x.imag().cwiseAbs().maxCoeff() <= tol;
    case LieFamily::CompactSymplectic: {
      const CMat j = quaternionic_structure(spec.size);
      return max_abs(CMat(x * j - j * x.conjugate())) <= tol;
    }
  }
  return false;
}

CMat project_to_algebra(const CompactGroupSpec& spec, const CMat& x) {
  const int m = spec.matrix_dim();
  CMat a = 0.5 * (x - x.adjoint());
  switch (spec.family) {
    case LieFamily::SpecialUnitary:
      a -= (a.trace() / static_cast<double>(m)) * CMat::Identity(m, m);
      break;
    case LieFamily::SpecialOrthogonal:
      a = CMat(a.real().cast<cplx>());
      break;
    case LieFamily::CompactSymplectic: {
      const CMat j = quaternionic_structure(spec.size);
      a = 0.5 * (a - j * a.conjugate() * j);  // J^{-1} = -J
      break;
    }
  }
  return a;
}

std::vector<AlgebraElement> algebra_basis(const CompactGroupSpec& spec) {
  const int m = spec.matrix_dim();
  std::vector<AlgebraElement> basis;
  auto try_add = [&](CMat candidate) {
    candidate = project_to_algebra(spec, candidate);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& e : basis) candidate -= algebra_inner(e.matrix, candidate) * e.matrix;
    const double norm = algebra_norm(candidate);
    if (norm > 1e-8) basis.push_back({candidate / norm});
  };
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      CMat e = CMat::Zero(m, m);
      e(a, b) = 1.0;
      try_add(e);
      e(a, b) = cplx(0.0, 1.0);
      try_add(e);
    }
  }
  if (static_cast<int>(basis.size()) != spec.algebra_dim()) {
    throw Error(ErrorKind::InvalidParameter, "algebra basis construction lost dimensions");
  }
  return basis;
}

Vec algebra_coords(const std::vector<AlgebraElement>& basis, const CMat& x) {
  Vec c(static_cast<int>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) c(static_cast<int>(i)) = algebra_inner(basis[i].matrix, x);
  return c;
}

GroupElement identity_element(const CompactGroupSpec& spec) {
  const int m = spec.matrix_dim();
  return {CMat::Identity(m, m)};
}

GroupElement haar_element(const CompactGroupSpec& spec, Rng& rng) {
  switch (spec.family) {
    case LieFamily::SpecialUnitary: return {haar_special_unitary(spec.size, rng)};
    case LieFamily::SpecialOrthogonal: return {haar_special_orthogonal(spec.size, rng).cast<cplx>()};
    case LieFamily::CompactSymplectic: return {haar_compact_symplectic(spec.size, rng)};
  }
  return identity_element(spec);
}

GroupElement group_exp(const CompactGroupSpec& spec, const AlgebraElement& x) {
  CMat g = skew_hermitian_exp(x.matrix);
  if (spec.family == LieFamily::SpecialOrthogonal) g = CMat(g.real().cast<cplx>());
  return {g};
}

AlgebraElement random_algebra_element(const CompactGroupSpec& spec, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto basis = algebra_basis(spec);
  const int m = spec.matrix_dim();
  CMat x = CMat::Zero(m, m);
  for (const auto& e : basis) x += normal(rng) * e.matrix;
  return {x};
}

double min_traceless_branch_norm_sq(const std::vector<double>& angles, int window) {
  double total = 0.0;
  for (double a : angles) total += a;
  const long target = -std::lround(total / (2.0 * kPi));
  // best[s] = minimal cost for a prefix whose shifts sum to s.
  std::map<long, double> best{{0, 0.0}};
  for (double a : angles) {
    std::map<long, double> next;
    for (const auto& [s, cost] : best) {
      for (int m = -window; m <= window; ++m) {
        const double shifted = a + 2.0 * kPi * m;
        const double c = cost + shifted * shifted;
        auto [it, inserted] = next.emplace(s + m, c);
        if (!inserted && c < it->second) it->second = c;
      }
    }
    best = std::move(next);
  }
  const auto it = best.find(target);
  return it == best.end() ? std::numeric_limits<double>::infinity() : it->second;
}

double distance_from_identity(const CompactGroupSpec& spec, const CMat& u, int shift_window) {
  const auto angles = unitary_eigen_angles(u);
  if (spec.family == LieFamily::SpecialUnitary) {
    return std::sqrt(min_traceless_branch_norm_sq(angles, shift_window));
  }
  double sum = 0.0;
  for (double a : angles) sum += a * a;
  return std::sqrt(sum);
}

double biinvariant_distance(const CompactGroupSpec& spec, const GroupElement& g, const GroupElement& h) {
  validate_element(spec, g);
  validate_element(spec, h);
  return distance_from_identity(spec, g.matrix.adjoint() * h.matrix);
}

CMat TwoSidedIsometry::apply(const CMat& x) const {
  if (inverted) return g1.matrix * x.adjoint() * g2.matrix;
  return g1.matrix.adjoint() * x * g2.matrix;
}

namespace {

double displacement_unchecked(const CompactGroupSpec& spec, const TwoSidedIsometry& iso, const CMat& x) {
  return distance_from_identity(spec, x.adjoint() * iso.apply(x));
}

}  // namespace

double translation_displacement(const CompactGroupSpec& spec, const TwoSidedIsometry& iso,
                                const GroupElement& x) {
  validate_element(spec, iso.g1);
  validate_element(spec, iso.g2);
  validate_element(spec, x);
  return displacement_unchecked(spec, iso, x.matrix);
}

std::vector<GroupElement> center_elements(const CompactGroupSpec& spec) {
  const int m = spec.matrix_dim();
  const CMat id = CMat::Identity(m, m);
  std::vector<GroupElement> z;
  switch (spec.family) {
    case LieFamily::SpecialUnitary:
      for (int k = 0; k < spec.size; ++k) z.push_back({std::polar(1.0, 2.0 * kPi * k / spec.size) * id});
      break;
    case LieFamily::SpecialOrthogonal:
      z.push_back({id});
      if (spec.size % 2 == 0) z.push_back({-id});
      break;
    case LieFamily::CompactSymplectic:
      z.push_back({id});
      z.push_back({-id});
      break;
  }
  return z;
}

double distance_to_center(const CompactGroupSpec& spec, const GroupElement& g) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& z : center_elements(spec)) {
    best = std::min(best, distance_from_identity(spec, z.matrix.adjoint() * g.matrix));
  }
  return best;
}

ConstancyCheck is_constant_displacement_translation(const CompactGroupSpec& spec,
                                                    const TwoSidedIsometry& iso, double tol,
                                                    std::size_t samples, Rng& rng) {
  if (samples < 10) throw Error(ErrorKind::InvalidParameter, "need at least 10 samples");
  validate_element(spec, iso.g1);
  validate_element(spec, iso.g2);
  std::vector<double> values(samples);
  for (auto& v : values) v = displacement_unchecked(spec, iso, haar_element(spec, rng).matrix);

  ConstancyCheck c;
  c.profile = DisplacementProfile::from_values(values);
  c.constant = c.profile.gap() <= tol;
  c.g1_central = distance_to_center(spec, iso.g1) <= tol;
  c.g2_central = distance_to_center(spec, iso.g2) <= tol;
  c.centrality_applicable = !iso.inverted;
  c.centrality_predicts_constant = c.centrality_applicable && (c.g1_central || c.g2_central);
  c.disagreement = c.constant != c.centrality_predicts_constant;
  return c;
}

MinDisplacement min_displacement(const CompactGroupSpec& spec, const TwoSidedIsometry& iso,
                                 int multistarts, int refine_steps, Rng& rng) {
  if (multistarts < 1) throw Error(ErrorKind::InvalidParameter, "need at least one start");
  validate_element(spec, iso.g1);
  validate_element(spec, iso.g2);
  const auto basis = algebra_basis(spec);
  std::vector<CMat> directions;
  for (const auto& e : basis) directions.push_back(e.matrix);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    CMat d = random_algebra_element(spec, rng).matrix;
    directions.push_back(d / algebra_norm(d));
  }

  MinDisplacement best{std::numeric_limits<double>::infinity(), identity_element(spec)};
  for (int start = 0; start < multistarts; ++start) {
    CMat x = haar_element(spec, rng).matrix;
    double f = displacement_unchecked(spec, iso, x);
    double step = 0.5;
    for (int it = 0; it < refine_steps && f > 0.0 && step > 1e-14; ++it) {
      bool improved = false;
      for (const auto& d : directions) {
        for (double sign : {1.0, -1.0}) {
          const CMat y = x * group_exp(spec, {sign * step * d}).matrix;
          const double fy = displacement_unchecked(spec, iso, y);
          if (fy < f) {
            x = y;
            f = fy;
            improved = true;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    if (f < best.value) best = {f, {x}};
  }
  return best;
}

}  // namespace cwb
