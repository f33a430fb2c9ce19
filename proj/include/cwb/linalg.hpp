#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace cwb {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using cplx = std::complex<double>;

using Rng = std::mt19937_64;

inline constexpr double kPi = 3.14159265358979323846;

// --- sampling -------------------------------------------------------------

Vec gaussian_vector(int n, Rng& rng);
CVec complex_gaussian_vector(int n, Rng& rng);

/// Uniform point on the unit sphere S^{n-1} in R^n (normalized Gaussian).
Vec haar_sphere_point(int n, Rng& rng);

/// Haar-distributed orthogonal matrix (QR of a Gaussian matrix, sign-corrected).
Mat haar_orthogonal(int n, Rng& rng);
Mat haar_special_orthogonal(int n, Rng& rng);
CMat haar_unitary(int n, Rng& rng);
CMat haar_special_unitary(int n, Rng& rng);

/// Haar element of Sp(n) realized in U(2n): quaternionic Gram-Schmidt with
/// columns paired as (c_k, J conj(c_k)).
CMat haar_compact_symplectic(int n, Rng& rng);

/// The quaternionic structure matrix J = [[0, -I], [I, 0]] of size 2n.
CMat quaternionic_structure(int n);

// --- linear algebra helpers ------------------------------------------------

/// Orthonormal basis (columns) of the null space of A. Singular values below
/// rel_cutoff * sigma_max count as zero; a zero matrix has full null space.
Mat null_space(const Mat& a, double rel_cutoff);
/// Same, with the cutoff taken relative to max(sigma_max, scale): a matrix
/// that is pure roundoff on the given scale has full null space.
Mat null_space(const Mat& a, double rel_cutoff, double scale);

/// Rank with the same relative singular value cutoff.
int numeric_rank(const Mat& a, double rel_cutoff);

/// Rotation block R(theta) in the plane.
Eigen::Matrix2d rotation2(double theta);

/// Block-diagonal real matrix diag(R(theta_1), ..., R(theta_r)).
Mat block_rotation(const std::vector<double>& angles);

/// Realification of a complex n x n matrix as a real 2n x 2n matrix in the
/// basis (Re z_1, Im z_1, ..., Re z_n, Im z_n).
Mat realify(const CMat& m);

/// Eigenvalue arguments (in (-pi, pi]) of a unitary matrix via complex Schur.
std::vector<double> unitary_eigen_angles(const CMat& u);

/// Principal logarithm of a unitary matrix (skew-hermitian result).
CMat unitary_log(const CMat& u);

/// Exponential of a skew-hermitian matrix through the hermitian eigensolver.
CMat skew_hermitian_exp(const CMat& x);

double max_abs(const Mat& a);
double max_abs(const CMat& a);

}  // namespace cwb
