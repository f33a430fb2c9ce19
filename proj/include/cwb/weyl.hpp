#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cwb/linalg.hpp"

namespace cwb {

enum class RootType { A, B, C, D, G2 };

std::string to_string(RootType type);
/// Parses "A", "B", "C", "D" or "G2"; throws UnsupportedType otherwise.
RootType parse_root_type(const std::string& s);

/// Simple roots (rows) of the explicit root-vector model: A_n in R^{n+1},
/// B_n, C_n, D_n in R^n, G2 in R^3. Throws UnsupportedType outside
/// A 1..8, B 1..8, C 1..8, D 2..8, G2 (rank 2).
Mat simple_roots(RootType type, int rank);

/// Size of the orbit of v under the group generated by reflections in the
/// given simple roots (rows), by breadth-first closure.
std::uint64_t weyl_orbit_size(const Mat& roots, const Vec& v);

/// Weyl group order from the root-vector model: the orbit of a fundamental
/// weight times the order of its stabilizer, a parabolic subgroup handled
/// recursively.
std::uint64_t weyl_group_order(RootType type, int rank);
std::uint64_t weyl_group_order(const Mat& simple_roots);

/// (n+1)!, 2^n n!, 2^{n-1} n!, 12.
std::uint64_t weyl_order_closed_form(RootType type, int rank);

/// A factor of a compact connected Lie group: a simple factor of the given
/// type or a torus of the given dimension.
struct LieFactor {
  bool torus = false;
  RootType type = RootType::A;
  int rank = 1;

  static LieFactor simple(RootType t, int r) { return {false, t, r}; }
  static LieFactor torus_of(int dim) { return {true, RootType::A, dim}; }
};

struct EulerResult {
  bool equal_rank = false;
  std::int64_t value = 0;  // chi(G/H); 0 when the ranks differ
};

/// chi(G/H) = |W_G| / prod |W_{H_i}| when rank H = rank G (tori contribute 1),
/// otherwise NotEqualRank (equal_rank = false, chi = 0).
EulerResult euler_characteristic(const std::vector<LieFactor>& g, const std::vector<LieFactor>& h);

}  // namespace cwb
