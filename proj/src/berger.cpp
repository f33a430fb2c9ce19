#include "cwb/berger.hpp"

#include <cmath>

#include <Eigen/SVD>

#include "cwb/error.hpp"
#include "cwb/quaternion.hpp"

namespace cwb {

std::vector<AlgebraElement> su2_quaternion_basis() {
  const double s = 1.0 / std::sqrt(2.0);
  return {{su2_matrix(Quaternion::i()) * s}, {su2_matrix(Quaternion::j()) * s}, {su2_matrix(Quaternion::k()) * s}};
}

BergerIsometryAlgebra berger_right_isometry_algebra(double a, double b) {
  if (!(a > 0.0 && a <= b && b <= 1.0)) {
    throw Error(ErrorKind::InvalidCoefficients, "need 0 < a <= b <= 1");
  }
  const auto basis = su2_quaternion_basis();
  const Eigen::Vector3d q(1.0, b, a);

  // ad(E_k) in the basis, then the linear map X -> Q ad X + (ad X)^T Q.
  Mat system(9, 3);
  for (int k = 0; k < 3; ++k) {
    Eigen::Matrix3d ad;
    for (int j = 0; j < 3; ++j) ad.col(j) = algebra_coords(basis, bracket(basis[k].matrix, basis[j].matrix));
    const Eigen::Matrix3d s = q.asDiagonal() * ad + ad.transpose() * q.asDiagonal();
    system.col(k) = Eigen::Map<const Eigen::Matrix<double, 9, 1>>(s.data());
  }

  BergerIsometryAlgebra out;
  // The system has unit scale (ad of an orthonormal basis), so the cutoff is
  // absolute: at a = b = 1 the whole system is roundoff.
  Eigen::JacobiSVD<Mat> svd(system, Eigen::ComputeFullV);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i) rank += svd.singularValues()(i) > out.cutoff ? 1 : 0;
  out.coords = svd.matrixV().rightCols(3 - rank);
  out.dimension = static_cast<int>(out.coords.cols());
  for (int c = 0; c < out.dimension; ++c) {
    CMat x = CMat::Zero(2, 2);
    for (int k = 0; k < 3; ++k) x += out.coords(k, c) * basis[k].matrix;
    out.basis.push_back({x});
  }
  return out;
}

}  // namespace cwb
