#include "cwb/killing.hpp"

#include <cmath>

#include "cwb/error.hpp"

namespace cwb {

namespace {

constexpr std::size_t kMinCenterSamples = 10000;

void validate_generator(const HomogeneousSpaceSpec& space, const KillingGenerator& gen) {
  const double ln = gen.left.matrix.size() ? algebra_norm(gen.left.matrix) : 0.0;
  const double rn = gen.right.matrix.size() ? algebra_norm(gen.right.matrix) : 0.0;
  if (ln + rn == 0.0) throw Error(ErrorKind::ZeroField, "Killing generator is zero");
  const int d = space.group().matrix_dim();
  for (const CMat* m : {&gen.left.matrix, &gen.right.matrix}) {
    if (m->size() && (m->rows() != d || m->cols() != d || !is_in_algebra(space.group(), *m, 1e-9))) {
      throw Error(ErrorKind::InvalidParameter, "Killing generator is not in " + space.group().name());
    }
  }
  if (gen.right.matrix.size()) {
    for (const auto& h : space.isotropy_basis()) {
      if (algebra_norm(bracket(h.matrix, gen.right.matrix)) > 1e-8) {
        throw Error(ErrorKind::InvalidParameter, "right generator does not centralize the isotropy algebra");
      }
    }
  }
}

Vec check_w(const Vec& w) {
  if (w.size() == 0 || w.norm() == 0.0) throw Error(ErrorKind::ZeroVector, "center of gravity needs w != 0");
  return w;
}

}  // namespace

KillingGenerator KillingGenerator::left_field(const AlgebraElement& xi) { return {xi, {CMat()}}; }
KillingGenerator KillingGenerator::right_field(const AlgebraElement& eta) { return {{CMat()}, eta}; }

double metric_norm(const HomogeneousSpaceSpec& space, const CMat& x) {
  const auto& m = space.complement_basis();
  double sq = 0.0;
  for (const auto& block : space.metric_blocks()) {
    double part = 0.0;
    for (int idx : block.indices) {
      const double c = algebra_inner(m[idx].matrix, x);
      part += c * c;
    }
    sq += block.coefficient * part;
  }
  return std::sqrt(sq);
}

double killing_length_at(const HomogeneousSpaceSpec& space, const KillingGenerator& gen, const GroupElement& g) {
  const int d = space.group().matrix_dim();
  CMat x = CMat::Zero(d, d);
  if (gen.left.matrix.size()) x += g.matrix.adjoint() * gen.left.matrix * g.matrix;
  if (gen.right.matrix.size()) x -= gen.right.matrix;
  return metric_norm(space, x);
}

DisplacementProfile killing_length_profile_at(const HomogeneousSpaceSpec& space, const KillingGenerator& gen,
                                              const std::vector<GroupElement>& points) {
  validate_generator(space, gen);
  std::vector<double> lengths;
  lengths.reserve(points.size());
  for (const auto& g : points) lengths.push_back(killing_length_at(space, gen, g));
  return DisplacementProfile::from_values(lengths);
}

DisplacementProfile killing_length_profile(const HomogeneousSpaceSpec& space, const KillingGenerator& gen,
                                           std::size_t samples, Rng& rng) {
  validate_generator(space, gen);
  std::vector<GroupElement> points;
  points.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) points.push_back(haar_element(space.group(), rng));
  return killing_length_profile_at(space, gen, points);
}

DisplacementProfile killing_length_profile(const HomogeneousSpaceSpec& space, const AlgebraElement& xi,
                                           std::size_t samples, Rng& rng) {
  return killing_length_profile(space, KillingGenerator::left_field(xi), samples, rng);
}

bool is_constant_length(const DisplacementProfile& profile, double tol) { return profile.relative_gap() <= tol; }

Vec center_of_gravity(const std::vector<Mat>& group, const Vec& w) {
  check_w(w);
  if (group.empty()) throw Error(ErrorKind::InvalidParameter, "empty group");
  Vec sum = Vec::Zero(w.size());
  for (const auto& g : group) sum += g * w;
  return sum / static_cast<double>(group.size());
}

Vec center_of_gravity(const std::function<Mat(Rng&)>& sampler, const Vec& w, std::size_t samples, Rng& rng) {
  check_w(w);
  if (samples < kMinCenterSamples) {
    throw Error(ErrorKind::InvalidParameter, "Monte Carlo center of gravity needs at least 10000 samples");
  }
  Vec sum = Vec::Zero(w.size());
  for (std::size_t i = 0; i < samples; ++i) sum += sampler(rng) * w;
  return sum / static_cast<double>(samples);
}

Vec center_of_gravity(const CompactGroupSpec& group, const Vec& w, std::size_t samples, Rng& rng) {
  const auto sampler = [&group](Rng& r) -> Mat {
    const CMat g = haar_element(group, r).matrix;
    return group.family == LieFamily::SpecialOrthogonal ? Mat(g.real()) : realify(g);
  };
  return center_of_gravity(sampler, w, samples, rng);
}

}  // namespace cwb
