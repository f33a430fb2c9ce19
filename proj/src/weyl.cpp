#include "cwb/weyl.hpp"

#include <cmath>
#include <deque>
#include <set>

#include "cwb/error.hpp"

namespace cwb {

namespace {

using Key = std::vector<long long>;

Key key_of(const Vec& v) {
  Key k(v.size());
  for (int i = 0; i < v.size(); ++i) k[i] = std::llround(v(i) * 1e6);
  return k;
}

Vec reflect(const Vec& v, const Vec& alpha) { return v - 2.0 * v.dot(alpha) / alpha.squaredNorm() * alpha; }

Mat drop_row(const Mat& m, int row) {
  Mat out(m.rows() - 1, m.cols());
  for (int i = 0, k = 0; i < m.rows(); ++i)
    if (i != row) out.row(k++) = m.row(i);
  return out;
}

void check_range(RootType type, int rank) {
  bool ok = false;
  switch (type) {
    case RootType::A:
    case RootType::B:
    case RootType::C: ok = rank >= 1 && rank <= 8; break;
    case RootType::D: ok = rank >= 2 && rank <= 8; break;
    case RootType::G2: ok = rank == 2; break;
  }
  if (!ok) throw Error(ErrorKind::UnsupportedType, to_string(type) + std::to_string(rank) + " is not tabulated");
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

std::string to_string(RootType type) {
  switch (type) {
    case RootType::A: return "A";
    case RootType::B: return "B";
    case RootType::C: return "C";
    case RootType::D: return "D";
    case RootType::G2: return "G2";
  }
  return "?";
}

RootType parse_root_type(const std::string& s) {
  if (s == "A") return RootType::A;
  if (s == "B") return RootType::B;
  if (s == "C") return RootType::C;
  if (s == "D") return RootType::D;
  if (s == "G2" || s == "G") return RootType::G2;
  throw Error(ErrorKind::UnsupportedType, "unknown root type '" + s + "'");
}

Mat simple_roots(RootType type, int rank) {
  check_range(type, rank);
  if (type == RootType::G2) {
    Mat r(2, 3);
    r << 1, -1, 0, -2, 1, 1;
    return r;
  }
  const int dim = type == RootType::A ? rank + 1 : rank;
  Mat r = Mat::Zero(rank, dim);
  for (int i = 0; i + 1 < rank; ++i) {
    r(i, i) = 1.0;
    r(i, i + 1) = -1.0;
  }
  const int last = rank - 1;
  switch (type) {
    case RootType::A:
      r(last, last) = 1.0;
      r(last, last + 1) = -1.0;
      break;
    case RootType::B: r(last, last) = 1.0; break;
    case RootType::C: r(last, last) = 2.0; break;
    case RootType::D:
      r(last, last - 1) = 1.0;
      r(last, last) = 1.0;
      break;
    case RootType::G2: break;
  }
  return r;
}

std::uint64_t weyl_orbit_size(const Mat& roots, const Vec& v) {
  std::set<Key> seen{key_of(v)};
  std::deque<Vec> queue{v};
  while (!queue.empty()) {
    const Vec u = queue.front();
    queue.pop_front();
    for (int i = 0; i < roots.rows(); ++i) {
      Vec w = reflect(u, roots.row(i).transpose());
      if (seen.insert(key_of(w)).second) queue.push_back(std::move(w));
    }
  }
  return seen.size();
}

std::uint64_t weyl_group_order(const Mat& roots) {
  if (roots.rows() == 0) return 1;
  // Fundamental weight dual to the first simple root, inside the root span:
  // its stabilizer is generated by the remaining simple reflections.
  Vec target = Vec::Zero(roots.rows());
  target(0) = 1.0;
  const Vec omega = roots.completeOrthogonalDecomposition().solve(target);
  return weyl_orbit_size(roots, omega) * weyl_group_order(drop_row(roots, 0));
}

std::uint64_t weyl_group_order(RootType type, int rank) { return weyl_group_order(simple_roots(type, rank)); }

std::uint64_t weyl_order_closed_form(RootType type, int rank) {
  check_range(type, rank);
  switch (type) {
    case RootType::A: return factorial(rank + 1);
    case RootType::B:
    case RootType::C: return (std::uint64_t{1} << rank) * factorial(rank);
    case RootType::D: return (std::uint64_t{1} << (rank - 1)) * factorial(rank);
    case RootType::G2: return 12;
  }
  return 0;
}

EulerResult euler_characteristic(const std::vector<LieFactor>& g, const std::vector<LieFactor>& h) {
  int rank_g = 0;
  int rank_h = 0;
  std::uint64_t order_g = 1;
  std::uint64_t order_h = 1;
  for (const auto& f : g) {
    rank_g += f.rank;
    if (!f.torus) order_g *= weyl_group_order(f.type, f.rank);
  }
  for (const auto& f : h) {
    rank_h += f.rank;
    if (!f.torus) order_h *= weyl_group_order(f.type, f.rank);
  }
  if (rank_h > rank_g) throw Error(ErrorKind::InvalidParameter, "rank H exceeds rank G");
  if (rank_h != rank_g) return {false, 0};
  if (order_g % order_h != 0) throw Error(ErrorKind::InvalidParameter, "|W_H| does not divide |W_G|");
  return {true, static_cast<std::int64_t>(order_g / order_h)};
}

}  // namespace cwb
