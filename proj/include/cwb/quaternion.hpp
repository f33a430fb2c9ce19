#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>

#include "cwb/linalg.hpp"

namespace cwb {

/// w + xi + yj + zk with floating coefficients.
struct Quaternion {
  double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion identity() { return {1, 0, 0, 0}; }
  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  constexpr Quaternion operator*(const Quaternion& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z,
            w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w};
  }
  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
  constexpr Quaternion conjugate() const { return {w, -x, -y, -z}; }
  constexpr double norm_sq() const { return w * w + x * x + y * y + z * z; }

  double norm() const;
  Quaternion inverse() const;
  Quaternion normalized() const;
  bool is_unit(double tol = 1e-12) const;

  /// Componentwise distance in R^4.
  double distance(const Quaternion& o) const;

  std::array<double, 4> coeffs() const { return {w, x, y, z}; }
};

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// cos(theta) + sin(theta) * (unit imaginary axis).
Quaternion exp_imaginary(double theta, double ax, double ay, double az);

/// Matrix of x -> q x on R^4 = H in the basis (1, i, j, k).
Mat left_translation_matrix(const Quaternion& q);

/// Matrix of x -> x q on R^4 = H in the basis (1, i, j, k).
Mat right_translation_matrix(const Quaternion& q);

/// Standard embedding Sp(1) -> SU(2): w + xi + yj + zk -> [[w+xi, y+zi], [-y+zi, w-xi]].
CMat su2_matrix(const Quaternion& q);

// --- exact arithmetic for the polyhedral generators --------------------------

/// Reduced fraction with 64-bit parts. Generator arithmetic stays tiny, so
/// overflow is not a practical concern; it is still checked.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator-() const { return Rational(-num_, den_); }
  bool operator==(const Rational& o) const = default;
  bool is_zero() const { return num_ == 0; }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

/// Element a + b*sqrt2 + c*sqrt5 + d*sqrt10 of Q(sqrt2, sqrt5).
struct Surd {
  Rational a, b, c, d;

  static Surd rational(Rational r) { return {r, 0, 0, 0}; }
  static Surd sqrt2() { return {0, 1, 0, 0}; }
  static Surd sqrt5() { return {0, 0, 1, 0}; }

  Surd operator+(const Surd& o) const;
  Surd operator-(const Surd& o) const;
  Surd operator*(const Surd& o) const;
  Surd operator-() const { return {-a, -b, -c, -d}; }
  bool operator==(const Surd& o) const = default;
  double to_double() const;
};

struct ExactQuaternion {
  Surd w, x, y, z;

  ExactQuaternion operator*(const ExactQuaternion& o) const;
  bool operator==(const ExactQuaternion& o) const = default;
  Surd norm_sq() const;
  /// Exactly unit: norm_sq() == 1 in the field.
  bool is_unit() const;
  Quaternion to_double() const;
};

/// Golden ratio (1 + sqrt5)/2 and its inverse (sqrt5 - 1)/2, exactly.
Surd golden_ratio();
Surd golden_ratio_inverse();

/// (1 + i + j + k)/2, a Hurwitz unit of order 6.
ExactQuaternion hurwitz_generator();
/// (1 + i)/sqrt2, the octahedral extension element of order 8.
ExactQuaternion octahedral_generator();
/// (phi + phi^{-1} i + j)/2, the second icosian generator (order 10).
ExactQuaternion icosian_generator();

}  // namespace cwb
