#include "cwb/constant_curvature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "cwb/error.hpp"

namespace cwb {

OrthogonalMap::OrthogonalMap(Mat matrix, double tol) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1) {
    throw Error(ErrorKind::NonOrthogonalInput, "orthogonal map needs a square matrix");
  }
  const Mat gram = matrix_.transpose() * matrix_;
  const double err = max_abs(Mat(gram - Mat::Identity(matrix_.rows(), matrix_.cols())));
  if (err > tol) {
    throw Error(ErrorKind::NonOrthogonalInput, "A^T A - I = " + std::to_string(err));
  }
}

OrthogonalMap OrthogonalMap::compose(const OrthogonalMap& other) const {
  return OrthogonalMap(matrix_ * other.matrix_, 1e-8);
}

OrthogonalMap OrthogonalMap::inverse() const { return OrthogonalMap(matrix_.transpose()); }

double sphere_displacement(const OrthogonalMap& g, const Vec& x) {
  if (x.size() != g.ambient_dim() || std::abs(x.norm() - 1.0) > 1e-10) {
    throw Error(ErrorKind::NonUnitPoint, "point is not on the unit sphere");
  }
  const Vec gx = g.apply(x);
  return 2.0 * std::atan2((gx - x).norm(), (gx + x).norm());
}

DisplacementProfile sphere_profile(const OrthogonalMap& g, std::size_t samples, Rng& rng) {
  std::vector<double> values(samples);
  for (auto& v : values) v = sphere_displacement(g, haar_sphere_point(g.ambient_dim(), rng));
  return DisplacementProfile::from_values(values);
}

std::vector<double> eigen_rotation_angles(const OrthogonalMap& g) {
  Eigen::EigenSolver<Mat> es(g.matrix(), /*computeEigenvectors=*/false);
  const auto& ev = es.eigenvalues();
  std::vector<double> angles(ev.size());
  for (int i = 0; i < ev.size(); ++i) angles[i] = std::abs(std::arg(ev(i)));
  std::sort(angles.begin(), angles.end());
  return angles;
}

CliffordTest is_clifford_sphere(const OrthogonalMap& g, double tol) {
  CliffordTest t;
  const auto angles = eigen_rotation_angles(g);
  t.spread = angles.back() - angles.front();
  const Mat& a = g.matrix();
  const Mat sym = 0.5 * (a + a.transpose());
  const double c = sym.trace() / static_cast<double>(a.rows());
  t.symmetric_residual = max_abs(Mat(sym - c * Mat::Identity(a.rows(), a.cols())));
  t.clifford = t.spread <= tol;
  if (t.clifford) {
    t.angle = std::accumulate(angles.begin(), angles.end(), 0.0) / static_cast<double>(angles.size());
  } else {
    t.angle = std::acos(std::clamp(c, -1.0, 1.0));
  }
  return t;
}

namespace {

bool near_identity(const Mat& m, double tol) {
  return max_abs(Mat(m - Mat::Identity(m.rows(), m.cols()))) <= tol;
}

}  // namespace

FreenessResult is_free_on_sphere(const std::vector<OrthogonalMap>& group, double tol) {
  const std::size_t n = group.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Mat p = group[a].matrix() * group[b].matrix();
      const bool found = std::any_of(group.begin(), group.end(), [&](const OrthogonalMap& h) {
        return max_abs(Mat(h.matrix() - p)) <= tol;
      });
      if (!found) {
        throw Error(ErrorKind::NotClosed,
                    "product of elements " + std::to_string(a) + " and " + std::to_string(b));
      }
    }
  }
  FreenessResult r;
  r.free = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (near_identity(group[i].matrix(), tol)) continue;
    Eigen::EigenSolver<Mat> es(group[i].matrix(), false);
    const auto& ev = es.eigenvalues();
    for (int k = 0; k < ev.size(); ++k) {
      if (std::abs(ev(k) - std::complex<double>(1.0, 0.0)) <= tol) {
        r.free = false;
        r.offender = i;
        return r;
      }
    }
  }
  return r;
}

std::vector<OrthogonalMap> lens_group(int k, const std::vector<int>& exponents) {
  if (k < 2 || exponents.empty()) {
    throw Error(ErrorKind::InvalidParameter, "lens group needs k >= 2 and at least one exponent");
  }
  for (int q : exponents) {
    if (std::gcd(q, k) != 1) {
      throw Error(ErrorKind::NonCoprimeExponent,
                  "exponent " + std::to_string(q) + " shares a factor with " + std::to_string(k));
    }
  }
  std::vector<OrthogonalMap> out;
  out.reserve(k);
  for (int j = 0; j < k; ++j) {
    std::vector<double> angles;
    for (int q : exponents) angles.push_back(2.0 * kPi * static_cast<double>((static_cast<long>(q) * j) % k) / k);
    out.emplace_back(block_rotation(angles));
  }
  return out;
}

bool invariant_geodesic_check(const OrthogonalMap& g, const Vec& x, int grid, double tol) {
  if (x.size() != g.ambient_dim() || std::abs(x.norm() - 1.0) > 1e-10) {
    throw Error(ErrorKind::NonUnitPoint, "point is not on the unit sphere");
  }
  if (grid < 1) throw Error(ErrorKind::InvalidParameter, "grid must be positive");
  const CliffordTest test = is_clifford_sphere(g, tol);
  if (!test.clifford) {
    throw Error(ErrorKind::NotClifford, "angle spread " + std::to_string(test.spread));
  }
  const double c = test.angle;
  const Vec y = g.apply(x);
  Vec u = y - x.dot(y) * x;
  if (u.norm() <= 1e-12) {
    // gx = +-x: any great circle through x is minimizing.
    for (int i = 0; i < x.size(); ++i) {
      Vec e = Vec::Unit(x.size(), i);
      u = e - x.dot(e) * x;
      if (u.norm() > 1e-6) break;
    }
  }
  u.normalize();
  auto sigma = [&](double t) -> Vec { return std::cos(t) * x + std::sin(t) * u; };
  for (int k = 0; k < grid; ++k) {
    const double t = 2.0 * kPi * k / grid;
    if ((g.apply(sigma(t)) - sigma(t + c)).norm() > tol) return false;
  }
  return true;
}

EuclideanMotion::EuclideanMotion(Mat a, Vec b) : rotation(std::move(a)), translation(std::move(b)) {
  if (rotation.rows() != rotation.cols() || rotation.rows() != translation.size()) {
    throw Error(ErrorKind::InvalidParameter, "euclidean motion dimensions disagree");
  }
  const double err = max_abs(Mat(rotation.transpose() * rotation - Mat::Identity(rotation.rows(), rotation.cols())));
  if (err > 1e-10) throw Error(ErrorKind::NonOrthogonalInput, "rotation part is not orthogonal");
}

bool BoundednessEvidence::strictly_increasing() const {
  for (std::size_t i = 1; i < sup_displacement.size(); ++i)
    if (!(sup_displacement[i] > sup_displacement[i - 1])) return false;
  return true;
}

bool BoundednessEvidence::constant(double tol) const {
  if (sup_displacement.empty()) return true;
  const auto [lo, hi] = std::minmax_element(sup_displacement.begin(), sup_displacement.end());
  return *hi - *lo <= tol;
}

BoundednessEvidence euclidean_bounded(const EuclideanMotion& motion, const std::vector<double>& radii) {
  const int n = static_cast<int>(motion.translation.size());
  const Mat m = motion.rotation - Mat::Identity(n, n);
  BoundednessEvidence ev;
  ev.bounded = max_abs(m) <= 1e-10;
  ev.radii = radii;

  // Candidate directions: right singular vectors of A - I, the translation and
  // its pullback, plus a fixed pseudo-random spread.
  std::vector<Vec> dirs;
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
  for (int i = 0; i < n; ++i) dirs.push_back(svd.matrixV().col(i));
  if (motion.translation.norm() > 0.0) {
    dirs.push_back(motion.translation.normalized());
    const Vec pull = m.transpose() * motion.translation;
    if (pull.norm() > 0.0) dirs.push_back(pull.normalized());
  }
  Rng rng(0x5eed);
  for (int i = 0; i < 512; ++i) dirs.push_back(haar_sphere_point(n, rng));

  for (double r : radii) {
    double sup = 0.0;
    for (const auto& d : dirs) {
      for (double s : {1.0, -1.0}) {
        const Vec x = s * r * d;
        sup = std::max(sup, (motion.apply(x) - x).norm());
      }
    }
    ev.sup_displacement.push_back(sup);
  }
  return ev;
}

HyperbolicMotion::HyperbolicMotion(const Eigen::Matrix2d& m) : m_(m) {
  if (std::abs(m.determinant() - 1.0) > 1e-12) {
    throw Error(ErrorKind::InvalidParameter, "hyperbolic motion needs determinant 1");
  }
}

std::complex<double> HyperbolicMotion::apply(std::complex<double> z) const {
  return (m_(0, 0) * z + m_(0, 1)) / (m_(1, 0) * z + m_(1, 1));
}

bool HyperbolicMotion::is_identity(double tol) const {
  const Eigen::Matrix2d id = Eigen::Matrix2d::Identity();
  return (m_ - id).cwiseAbs().maxCoeff() <= tol || (m_ + id).cwiseAbs().maxCoeff() <= tol;
}

double hyperbolic_displacement(const HyperbolicMotion& m, std::complex<double> z) {
  const std::complex<double> w = m.apply(z);
  const double num = std::norm(z - w);
  return std::acosh(1.0 + num / (2.0 * z.imag() * w.imag()));
}

std::complex<double> hyperbolic_circle_point(double r, double theta) {
  const std::complex<double> w = std::polar(std::tanh(0.5 * r), theta);
  const std::complex<double> i(0.0, 1.0);
  return i * (1.0 + w) / (1.0 - w);
}

BoundednessEvidence hyperbolic_bounded_probe(const HyperbolicMotion& m, const std::vector<double>& radii) {
  constexpr int kCirclePoints = 1440;
  BoundednessEvidence ev;
  ev.bounded = m.is_identity();
  ev.radii = radii;
  double running = hyperbolic_displacement(m, {0.0, 1.0});
  for (double r : radii) {
    for (int k = 0; k < kCirclePoints; ++k) {
      const double theta = 2.0 * kPi * k / kCirclePoints;
      running = std::max(running, hyperbolic_displacement(m, hyperbolic_circle_point(r, theta)));
    }
    ev.sup_displacement.push_back(running);
  }
  return ev;
}

}  // namespace cwb
