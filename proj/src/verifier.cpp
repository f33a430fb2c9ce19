#include "cwb/verifier.hpp"

#include <algorithm>
#include <cmath>

#include "cwb/error.hpp"

namespace cwb {

namespace {

constexpr double kRankCutoff = 1e-8;
constexpr double kClosureTol = 1e-9;

CMat conj_action(const CMat& g, const CMat& x) { return g * x * g.adjoint(); }

Vec flatten(const CMat& m) {
  Vec v(2 * m.size());
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    v(2 * i) = m.data()[i].real();
    v(2 * i + 1) = m.data()[i].imag();
  }
  return v;
}

Vec flatten(const AmbientVector& a) {
  const Vec fx = flatten(a.x);
  const Vec fy = flatten(a.y);
  Vec v(fx.size() + fy.size());
  v << fx, fy;
  return v;
}

AmbientVector combine(const std::vector<AmbientVector>& basis, const Vec& coeffs) {
  AmbientVector out{CMat::Zero(basis[0].x.rows(), basis[0].x.cols()),
                    CMat::Zero(basis[0].y.rows(), basis[0].y.cols())};
  for (std::size_t j = 0; j < basis.size(); ++j) {
    out.x += coeffs(static_cast<int>(j)) * basis[j].x;
    if (out.y.size()) out.y += coeffs(static_cast<int>(j)) * basis[j].y;
  }
  return out;
}

int rank_with_unit_scale(const Mat& m) {
  if (m.cols() == 0) return 0;
  return static_cast<int>(m.cols() - null_space(m, kRankCutoff, 1.0).cols());
}

CMat base_point(const Model& model) {
  if (model.kind == ModelKind::Sphere) {
    CMat x = CMat::Zero(model.sphere_dim + 1, 1);
    x(0, 0) = 1.0;
    return x;
  }
  return identity_element(*model.group).matrix;
}

CMat random_point(const Model& model, Rng& rng) {
  if (model.kind == ModelKind::Sphere) return haar_sphere_point(model.sphere_dim + 1, rng).cast<cplx>();
  return haar_element(*model.group, rng).matrix;
}

CMat act(const DeckElement& e, const CMat& x) {
  if (const auto* o = std::get_if<OrthogonalMap>(&e)) return o->matrix().cast<cplx>() * x;
  return std::get<TwoSidedIsometry>(e).apply(x);
}

// Closure of a group of two-sided isometries, compared through their action
// on a few random points (an inverted and a plain isometry never agree there).
void check_closed(const DeckGroup& group, const Model& model, Rng& rng) {
  std::vector<CMat> probes;
  for (int i = 0; i < 3; ++i) probes.push_back(random_point(model, rng));
  const auto same = [&](const std::vector<CMat>& a, const std::vector<CMat>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (max_abs(CMat(a[i] - b[i])) > kClosureTol * 10) return false;
    return true;
  };
  std::vector<std::vector<CMat>> images;
  for (const auto& e : group.elements) {
    std::vector<CMat> img;
    for (const auto& p : probes) img.push_back(act(e, p));
    images.push_back(std::move(img));
  }
  const auto contains = [&](const std::vector<CMat>& img) {
    return std::any_of(images.begin(), images.end(), [&](const auto& other) { return same(img, other); });
  };
  if (!contains(probes)) throw Error(ErrorKind::NotClosed, "group does not contain the identity");
  for (std::size_t a = 0; a < group.order(); ++a) {
    for (std::size_t b = 0; b < group.order(); ++b) {
      std::vector<CMat> img;
      for (const auto& p : images[b]) img.push_back(act(group.elements[a], p));
      if (!contains(img)) {
        throw Error(ErrorKind::NotClosed, "product of elements " + std::to_string(a) + " and " + std::to_string(b));
      }
    }
  }
}

bool acts_trivially(const DeckElement& e, const Model& model, Rng& rng) {
  for (int i = 0; i < 3; ++i) {
    const CMat p = random_point(model, rng);
    if (max_abs(CMat(act(e, p) - p)) > kClosureTol * 10) return false;
  }
  return true;
}

}  // namespace

Model Model::sphere(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidParameter, "sphere model needs n >= 2");
  Model m;
  m.kind = ModelKind::Sphere;
  m.sphere_dim = n;
  return m;
}

Model Model::group_manifold(const CompactGroupSpec& g) {
  Model m;
  m.kind = ModelKind::GroupManifold;
  m.group = g;
  return m;
}

int Model::manifold_dim() const { return kind == ModelKind::Sphere ? sphere_dim : group->algebra_dim(); }

std::string Model::name() const {
  return kind == ModelKind::Sphere ? "S^" + std::to_string(sphere_dim) : group->name();
}

double ambient_inner(const AmbientVector& a, const AmbientVector& b) {
  double s = algebra_inner(a.x, b.x);
  if (a.y.size() && b.y.size()) s += algebra_inner(a.y, b.y);
  return s;
}

std::vector<AmbientVector> ambient_basis(const Model& model) {
  std::vector<AmbientVector> out;
  if (model.kind == ModelKind::Sphere) {
    for (const auto& e : algebra_basis(CompactGroupSpec::so(model.sphere_dim + 1))) out.push_back({e.matrix, CMat()});
    return out;
  }
  const auto basis = algebra_basis(*model.group);
  const int d = model.group->matrix_dim();
  for (const auto& e : basis) out.push_back({e.matrix, CMat::Zero(d, d)});
  for (const auto& e : basis) out.push_back({CMat::Zero(d, d), e.matrix});
  return out;
}

DeckGroup DeckGroup::from_orthogonal(const std::vector<OrthogonalMap>& maps) {
  DeckGroup g;
  for (const auto& m : maps) g.elements.emplace_back(m);
  return g;
}

DeckGroup DeckGroup::from_matrices(const std::vector<Mat>& mats) {
  DeckGroup g;
  for (const auto& m : mats) g.elements.emplace_back(OrthogonalMap(m));
  return g;
}

AmbientVector adjoint_action(const DeckElement& gamma, const AmbientVector& v) {
  if (const auto* o = std::get_if<OrthogonalMap>(&gamma)) {
    return {conj_action(o->matrix().cast<cplx>(), v.x), v.y};
  }
  const auto& iso = std::get<TwoSidedIsometry>(gamma);
  const CMat& a = iso.g1.matrix;
  const CMat& b = iso.g2.matrix;
  if (iso.inverted) return {conj_action(a, v.y), conj_action(b.adjoint(), v.x)};
  return {conj_action(a.adjoint(), v.x), conj_action(b.adjoint(), v.y)};
}

void check_model(const DeckGroup& group, const Model& model) {
  for (std::size_t i = 0; i < group.order(); ++i) {
    const auto& e = group.elements[i];
    const std::string where = "element " + std::to_string(i) + " does not act on " + model.name();
    if (model.kind == ModelKind::Sphere) {
      const auto* o = std::get_if<OrthogonalMap>(&e);
      if (!o || o->ambient_dim() != model.sphere_dim + 1) throw Error(ErrorKind::ModelMismatch, where);
    } else {
      const auto* t = std::get_if<TwoSidedIsometry>(&e);
      const int d = model.group->matrix_dim();
      if (!t || t->g1.matrix.rows() != d || t->g2.matrix.rows() != d) throw Error(ErrorKind::ModelMismatch, where);
      validate_element(*model.group, t->g1);
      validate_element(*model.group, t->g2);
    }
  }
}

std::vector<AmbientVector> centralizer_algebra(const DeckGroup& group, const std::vector<AmbientVector>& ambient) {
  if (ambient.empty()) throw Error(ErrorKind::EmptyAmbient, "ambient basis is empty");
  const Eigen::Index len = flatten(ambient[0]).size();
  Mat stacked = Mat::Zero(len * static_cast<Eigen::Index>(std::max<std::size_t>(group.order(), 1)),
                          static_cast<Eigen::Index>(ambient.size()));
  for (std::size_t g = 0; g < group.order(); ++g) {
    for (std::size_t j = 0; j < ambient.size(); ++j) {
      const AmbientVector img = adjoint_action(group.elements[g], ambient[j]);
      stacked.block(static_cast<Eigen::Index>(g) * len, static_cast<Eigen::Index>(j), len, 1) =
          flatten(img) - flatten(ambient[j]);
    }
  }
  const Mat null = null_space(stacked, kRankCutoff, 1.0);
  std::vector<AmbientVector> out;
  for (int c = 0; c < null.cols(); ++c) out.push_back(combine(ambient, null.col(c)));
  return out;
}

Vec killing_vector_at(const Model& model, const AmbientVector& v, const CMat& x) {
  if (model.kind == ModelKind::Sphere) return (v.x * x).real();
  return flatten(CMat(-v.x * x + x * v.y));
}

RankEvidence transitivity_rank(const std::vector<AmbientVector>& z_basis, const Model& model,
                               std::size_t random_points, Rng& rng) {
  RankEvidence ev;
  ev.dim = model.manifold_dim();
  ev.min_rank = ev.dim;
  for (std::size_t p = 0; p <= random_points; ++p) {
    const CMat x = p == 0 ? base_point(model) : random_point(model, rng);
    int rank = 0;
    if (!z_basis.empty()) {
      const Vec first = killing_vector_at(model, z_basis[0], x);
      Mat fields(first.size(), static_cast<Eigen::Index>(z_basis.size()));
      fields.col(0) = first;
      for (std::size_t j = 1; j < z_basis.size(); ++j)
        fields.col(static_cast<Eigen::Index>(j)) = killing_vector_at(model, z_basis[j], x);
      rank = rank_with_unit_scale(fields);
    }
    ev.min_rank = std::min(ev.min_rank, rank);
    ++ev.points;
  }
  return ev;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::HomogeneousWitnessFound: return "HomogeneousWitnessFound";
    case Verdict::NotConstantDisplacement: return "NotConstantDisplacement";
    case Verdict::NotFree: return "NotFree";
    case Verdict::NoWitnessInAmbient: return "NoWitnessInAmbient";
  }
  return "?";
}

bool HomogeneityReport::all_constant() const {
  return std::all_of(elements.begin(), elements.end(), [](const ElementStatus& e) { return e.constant; });
}

Verdict derive_verdict(const HomogeneityReport& r) {
  if (!r.free) return Verdict::NotFree;
  if (!r.all_constant()) return Verdict::NotConstantDisplacement;
  if (r.rank.full()) return Verdict::HomogeneousWitnessFound;
  return Verdict::NoWitnessInAmbient;
}

HomogeneityReport verify_instance(const DeckGroup& group, const Model& model, const VerifyConfig& config) {
  if (config.samples < 10) throw Error(ErrorKind::InvalidParameter, "need at least 10 samples");
  if (!(config.tol > 0.0)) throw Error(ErrorKind::InvalidParameter, "tolerance must be positive");
  check_model(group, model);
  Rng rng(config.seed);

  HomogeneityReport r;
  r.model = model.name();
  r.group_order = group.order();
  r.config = config;
  r.instance_level_only = !model.symmetric;

  if (model.kind == ModelKind::Sphere) {
    std::vector<OrthogonalMap> maps;
    for (const auto& e : group.elements) maps.push_back(std::get<OrthogonalMap>(e));
    const auto fr = is_free_on_sphere(maps, config.tol);
    r.free = fr.free;
    r.fixed_point_element = fr.offender;
    for (std::size_t i = 0; i < maps.size(); ++i) {
      const auto c = is_clifford_sphere(maps[i], config.tol);
      r.elements.push_back({i, c.clifford, c.angle, c.spread, true});
    }
  } else {
    const auto& spec = *model.group;
    check_closed(group, model, rng);
    r.free = true;
    for (std::size_t i = 0; i < group.order(); ++i) {
      const auto& iso = std::get<TwoSidedIsometry>(group.elements[i]);
      if (acts_trivially(group.elements[i], model, rng)) {
        r.elements.push_back({i, true, 0.0, 0.0, true});
        continue;
      }
      if (r.free && min_displacement(spec, iso, config.multistarts, config.refine_steps, rng).value <= config.free_tol) {
        r.free = false;
        r.fixed_point_element = i;
      }
      const auto c = is_constant_displacement_translation(spec, iso, config.tol, config.samples, rng);
      r.elements.push_back({i, c.constant, c.profile.mean, c.profile.gap(), !c.disagreement});
    }
  }

  const auto z = centralizer_algebra(group, ambient_basis(model));
  r.centralizer_dim = static_cast<int>(z.size());
  r.rank = transitivity_rank(z, model, config.rank_points, rng);

  if (r.rank.full()) {
    r.forward_check_ran = true;
    for (std::size_t i = 0; i < group.order(); ++i) {
      double gap = 0.0;
      if (const auto* o = std::get_if<OrthogonalMap>(&group.elements[i])) {
        gap = sphere_profile(*o, config.samples, rng).gap();
      } else {
        gap = is_constant_displacement_translation(*model.group, std::get<TwoSidedIsometry>(group.elements[i]),
                                                   config.tol, config.samples, rng)
                  .profile.gap();
      }
      r.forward_max_gap = std::max(r.forward_max_gap, gap);
    }
    r.forward_check_passed = r.forward_max_gap <= config.tol;
  }
  r.verdict = derive_verdict(r);
  return r;
}

}  // namespace cwb
