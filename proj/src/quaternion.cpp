#include "cwb/quaternion.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>

#include "cwb/error.hpp"

namespace cwb {

double Quaternion::norm() const { return std::sqrt(norm_sq()); }

Quaternion Quaternion::inverse() const {
  const double n2 = norm_sq();
  const Quaternion c = conjugate();
  return {c.w / n2, c.x / n2, c.y / n2, c.z / n2};
}

Quaternion Quaternion::normalized() const {
  const double n = norm();
  return {w / n, x / n, y / n, z / n};
}

bool Quaternion::is_unit(double tol) const { return std::abs(norm_sq() - 1.0) <= tol; }

double Quaternion::distance(const Quaternion& o) const {
  const double dw = w - o.w, dx = x - o.x, dy = y - o.y, dz = z - o.z;
  return std::sqrt(dw * dw + dx * dx + dy * dy + dz * dz);
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << "(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
}

Quaternion exp_imaginary(double theta, double ax, double ay, double az) {
  const double n = std::sqrt(ax * ax + ay * ay + az * az);
  const double s = std::sin(theta) / n;
  return {std::cos(theta), s * ax, s * ay, s * az};
}

Mat left_translation_matrix(const Quaternion& q) {
  if (!q.is_unit(1e-10)) {
    throw Error(ErrorKind::NonUnitInput, "left translation needs a unit quaternion");
  }
  Mat m(4, 4);
  m << q.w, -q.x, -q.y, -q.z,
       q.x,  q.w, -q.z,  q.y,
       q.y,  q.z,  q.w, -q.x,
       q.z, -q.y,  q.x,  q.w;
  return m;
}

Mat right_translation_matrix(const Quaternion& q) {
  if (!q.is_unit(1e-10)) {
    throw Error(ErrorKind::NonUnitInput, "right translation needs a unit quaternion");
  }
  Mat m(4, 4);
  m << q.w, -q.x, -q.y, -q.z,
       q.x,  q.w,  q.z, -q.y,
       q.y, -q.z,  q.w,  q.x,
       q.z,  q.y, -q.x,  q.w;
  return m;
}

CMat su2_matrix(const Quaternion& q) {
  CMat m(2, 2);
  m << cplx(q.w, q.x), cplx(q.y, q.z),
       cplx(-q.y, q.z), cplx(q.w, -q.x);
  return m;
}

// --- Rational -----------------------------------------------------------------

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorKind::InvalidParameter, "rational overflow in exact arithmetic");
  }
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorKind::InvalidParameter, "rational overflow in exact arithmetic");
  }
  return r;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::InvalidParameter, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g == 0 ? 0 : num / g;
  den_ = g == 0 ? 1 : den / g;
}

Rational Rational::operator+(const Rational& o) const {
  const std::int64_t g = std::gcd(den_, o.den_);
  const std::int64_t l = checked_mul(den_ / g, o.den_);
  return Rational(checked_add(checked_mul(num_, l / den_), checked_mul(o.num_, l / o.den_)), l);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  const std::int64_t g1 = std::gcd(num_, o.den_);
  const std::int64_t g2 = std::gcd(o.num_, den_);
  const std::int64_t n1 = g1 == 0 ? num_ : num_ / g1;
  const std::int64_t d2 = g1 == 0 ? o.den_ : o.den_ / g1;
  const std::int64_t n2 = g2 == 0 ? o.num_ : o.num_ / g2;
  const std::int64_t d1 = g2 == 0 ? den_ : den_ / g2;
  return Rational(checked_mul(n1, n2), checked_mul(d1, d2));
}

// --- Surd ---------------------------------------------------------------------

Surd Surd::operator+(const Surd& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
Surd Surd::operator-(const Surd& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }

// Basis products: s2*s2 = 2, s5*s5 = 5, s10*s10 = 10, s2*s5 = s10,
// s2*s10 = 2 s5, s5*s10 = 5 s2.
Surd Surd::operator*(const Surd& o) const {
  const Rational two(2), five(5), ten(10);
  Surd r;
  r.a = a * o.a + two * b * o.b + five * c * o.c + ten * d * o.d;
  r.b = a * o.b + b * o.a + five * (c * o.d + d * o.c);
  r.c = a * o.c + c * o.a + two * (b * o.d + d * o.b);
  r.d = a * o.d + d * o.a + b * o.c + c * o.b;
  return r;
}

double Surd::to_double() const {
  return a.to_double() + b.to_double() * std::sqrt(2.0) + c.to_double() * std::sqrt(5.0) +
         d.to_double() * std::sqrt(10.0);
}

ExactQuaternion ExactQuaternion::operator*(const ExactQuaternion& o) const {
  return {w * o.w - x * o.x - y * o.y - z * o.z,
          w * o.x + x * o.w + y * o.z - z * o.y,
          w * o.y - x * o.z + y * o.w + z * o.x,
          w * o.z + x * o.y - y * o.x + z * o.w};
}

Surd ExactQuaternion::norm_sq() const { return w * w + x * x + y * y + z * z; }

bool ExactQuaternion::is_unit() const { return norm_sq() == Surd::rational(1); }

Quaternion ExactQuaternion::to_double() const {
  return {w.to_double(), x.to_double(), y.to_double(), z.to_double()};
}

Surd golden_ratio() { return {Rational(1, 2), 0, Rational(1, 2), 0}; }
Surd golden_ratio_inverse() { return {Rational(-1, 2), 0, Rational(1, 2), 0}; }

ExactQuaternion hurwitz_generator() {
  const Surd half = Surd::rational(Rational(1, 2));
  return {half, half, half, half};
}

ExactQuaternion octahedral_generator() {
  const Surd s = {0, Rational(1, 2), 0, 0};  // 1/sqrt2 = sqrt2/2
  return {s, s, Surd{}, Surd{}};
}

ExactQuaternion icosian_generator() {
  const Surd half = Surd::rational(Rational(1, 2));
  return {half * golden_ratio(), half * golden_ratio_inverse(), half, Surd{}};
}

}  // namespace cwb
