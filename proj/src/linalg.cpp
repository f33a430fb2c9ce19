#include "cwb/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

namespace cwb {

Vec gaussian_vector(int n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = normal(rng);
  return v;
}

CVec complex_gaussian_vector(int n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CVec v(n);
  for (int i = 0; i < n; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = cplx(re, im);
  }
  return v;
}

Vec haar_sphere_point(int n, Rng& rng) {
  for (;;) {
    Vec v = gaussian_vector(n, rng);
    const double norm = v.norm();
    if (norm > 1e-12) return v / norm;
  }
}

Mat haar_orthogonal(int n, Rng& rng) {
  Mat g(n, n);
  for (int j = 0; j < n; ++j) g.col(j) = gaussian_vector(n, rng);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  const Mat& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  }
  return q;
}

Mat haar_special_orthogonal(int n, Rng& rng) {
  Mat q = haar_orthogonal(n, rng);
  if (q.determinant() < 0.0) q.col(0) *= -1.0;
  return q;
}

CMat haar_unitary(int n, Rng& rng) {
  CMat g(n, n);
  for (int j = 0; j < n; ++j) g.col(j) = complex_gaussian_vector(n, rng);
  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ();
  const CMat& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const double a = std::abs(r(j, j));
    if (a > 0.0) q.col(j) *= r(j, j) / a;
  }
  return q;
}

CMat haar_special_unitary(int n, Rng& rng) {
  CMat u = haar_unitary(n, rng);
  const cplx det = u.determinant();
  const cplx root = std::polar(1.0, std::arg(det) / n);
  return u / root;
}

CMat quaternionic_structure(int n) {
  CMat j = CMat::Zero(2 * n, 2 * n);
  j.block(0, n, n, n) = -CMat::Identity(n, n);
  j.block(n, 0, n, n) = CMat::Identity(n, n);
  return j;
}

CMat haar_compact_symplectic(int n, Rng& rng) {
  const CMat j = quaternionic_structure(n);
  CMat u = CMat::Zero(2 * n, 2 * n);
  int built = 0;
  while (built < n) {
    CVec v = complex_gaussian_vector(2 * n, rng);
    // Two Gram-Schmidt passes keep the columns orthonormal to rounding.
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < built; ++k) {
        v -= u.col(k).dot(v) * u.col(k);
        v -= u.col(n + k).dot(v) * u.col(n + k);
      }
    }
    const double norm = v.norm();
    if (norm < 1e-8) continue;
    v /= norm;
    u.col(built) = v;
    u.col(n + built) = j * v.conjugate();
    ++built;
  }
  return u;
}

Mat null_space(const Mat& a, double rel_cutoff) { return null_space(a, rel_cutoff, 0.0); }

Mat null_space(const Mat& a, double rel_cutoff, double scale) {
  const int cols = static_cast<int>(a.cols());
  if (a.rows() == 0) return Mat::Identity(cols, cols);
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double smax = std::max(s.size() > 0 ? s(0) : 0.0, scale);
  int rank = 0;
  if (smax > 0.0) {
    for (int i = 0; i < s.size(); ++i) {
      if (s(i) > rel_cutoff * smax) ++rank;
    }
  }
  return svd.matrixV().rightCols(cols - rank);
}

int numeric_rank(const Mat& a, double rel_cutoff) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(a);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) <= 0.0) return 0;
  int rank = 0;
  for (int i = 0; i < s.size(); ++i) {
    if (s(i) > rel_cutoff * s(0)) ++rank;
  }
  return rank;
}

Eigen::Matrix2d rotation2(double theta) {
  Eigen::Matrix2d r;
  r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return r;
}

Mat block_rotation(const std::vector<double>& angles) {
  const int r = static_cast<int>(angles.size());
  Mat m = Mat::Zero(2 * r, 2 * r);
  for (int i = 0; i < r; ++i) m.block<2, 2>(2 * i, 2 * i) = rotation2(angles[i]);
  return m;
}

Mat realify(const CMat& m) {
  const int n = static_cast<int>(m.rows());
  Mat r(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const cplx z = m(i, j);
      r(2 * i, 2 * j) = z.real();
      r(2 * i, 2 * j + 1) = -z.imag();
      r(2 * i + 1, 2 * j) = z.imag();
      r(2 * i + 1, 2 * j + 1) = z.real();
    }
  }
  return r;
}

std::vector<double> unitary_eigen_angles(const CMat& u) {
  Eigen::ComplexSchur<CMat> schur(u, /*computeU=*/false);
  const CMat& t = schur.matrixT();
  std::vector<double> angles(t.rows());
  for (int i = 0; i < t.rows(); ++i) angles[i] = std::arg(t(i, i));
  return angles;
}

CMat unitary_log(const CMat& u) {
  Eigen::ComplexSchur<CMat> schur(u);
  const CMat& t = schur.matrixT();
  const CMat& q = schur.matrixU();
  CVec d(t.rows());
  for (int i = 0; i < t.rows(); ++i) d(i) = cplx(0.0, std::arg(t(i, i)));
  return q * d.asDiagonal() * q.adjoint();
}

CMat skew_hermitian_exp(const CMat& x) {
  const CMat h = cplx(0.0, 1.0) * x;  // hermitian when x is skew-hermitian
  Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (h + h.adjoint()));
  const Vec& lambda = es.eigenvalues();
  CVec d(lambda.size());
  for (int i = 0; i < lambda.size(); ++i) d(i) = std::polar(1.0, -lambda(i));
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

double max_abs(const Mat& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }
double max_abs(const CMat& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

}  // namespace cwb
