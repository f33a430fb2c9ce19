#include "cwb/finite_groups.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "cwb/error.hpp"

namespace cwb {

std::size_t GroupType::expected_order() const {
  switch (family) {
    case GroupFamily::Cyclic: return static_cast<std::size_t>(parameter);
    case GroupFamily::BinaryDihedral: return 4 * static_cast<std::size_t>(parameter);
    case GroupFamily::BinaryTetrahedral: return 24;
    case GroupFamily::BinaryOctahedral: return 48;
    case GroupFamily::BinaryIcosahedral: return 120;
    case GroupFamily::Unrecognized: return 0;
  }
  return 0;
}

std::string GroupType::name() const {
  switch (family) {
    case GroupFamily::Cyclic: return "Cyclic(" + std::to_string(parameter) + ")";
    case GroupFamily::BinaryDihedral: return "BinaryDihedral(" + std::to_string(parameter) + ")";
    case GroupFamily::BinaryTetrahedral: return "BinaryTetrahedral";
    case GroupFamily::BinaryOctahedral: return "BinaryOctahedral";
    case GroupFamily::BinaryIcosahedral: return "BinaryIcosahedral";
    case GroupFamily::Unrecognized: return "Unrecognized";
  }
  return "Unrecognized";
}

namespace {

// Elements indexed by their real part so lookups only scan a thin slab.
class QuaternionIndex {
 public:
  explicit QuaternionIndex(double tol) : tol_(tol) {}

  int find(const std::vector<Quaternion>& elems, const Quaternion& q) const {
    for (auto it = by_w_.lower_bound(q.w - tol_); it != by_w_.end() && it->first <= q.w + tol_; ++it) {
      if (elems[it->second].distance(q) <= tol_) return it->second;
    }
    return -1;
  }

  void insert(const Quaternion& q, int index) { by_w_.emplace(q.w, index); }

 private:
  double tol_;
  std::multimap<double, int> by_w_;
};

}  // namespace

int FiniteQuaternionGroup::find(const Quaternion& q, double tol) const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].distance(q) <= tol) return static_cast<int>(i);
  }
  return -1;
}

CayleyTable FiniteQuaternionGroup::cayley_table(double tol) const {
  const std::size_t n = elements.size();
  QuaternionIndex index(tol);
  for (std::size_t i = 0; i < n; ++i) index.insert(elements[i], static_cast<int>(i));
  std::vector<int> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const int idx = index.find(elements, elements[a] * elements[b]);
      if (idx < 0) throw Error(ErrorKind::NotClosed, "quaternion group is not closed");
      table[a * n + b] = idx;
    }
  }
  return CayleyTable(n, std::move(table));
}


FiniteQuaternionGroup generate_closure(const std::vector<Quaternion>& generators,
                                       std::size_t limit) {
  if (limit < 1) throw Error(ErrorKind::InvalidParameter, "closure limit must be >= 1");
  for (const auto& g : generators) {
    if (!g.is_unit(1e-10)) {
      throw Error(ErrorKind::NonUnitGenerator, "generator has norm^2 " + std::to_string(g.norm_sq()));
    }
  }
  FiniteQuaternionGroup group;
  group.generators = generators;
  group.elements.push_back(Quaternion::identity());
  QuaternionIndex index(kDedupTolerance);
  index.insert(group.elements[0], 0);

  for (std::size_t head = 0; head < group.elements.size(); ++head) {
    for (const auto& g : generators) {
      const Quaternion p = (group.elements[head] * g).normalized();
      if (index.find(group.elements, p) >= 0) continue;
      if (group.elements.size() >= limit) {
        throw Error(ErrorKind::ClosureExceedsLimit,
                    "closure exceeds limit " + std::to_string(limit));
      }
      index.insert(p, static_cast<int>(group.elements.size()));
      group.elements.push_back(p);
    }
  }
  return group;
}

std::vector<ExactQuaternion> exact_generators(const GroupType& tag) {
  const ExactQuaternion unit_i{Surd{}, Surd::rational(1), Surd{}, Surd{}};
  switch (tag.family) {
    case GroupFamily::BinaryTetrahedral: return {hurwitz_generator(), unit_i};
    case GroupFamily::BinaryOctahedral: return {hurwitz_generator(), octahedral_generator()};
    case GroupFamily::BinaryIcosahedral: return {hurwitz_generator(), icosian_generator()};
    default:
      throw Error(ErrorKind::InvalidParameter, "exact generators exist only for the polyhedral tags");
  }
}

FiniteQuaternionGroup named_binary_group(const GroupType& tag) {
  std::vector<Quaternion> gens;
  switch (tag.family) {
    case GroupFamily::Cyclic:
      if (tag.parameter < 1) throw Error(ErrorKind::InvalidParameter, "Cyclic(n) needs n >= 1");
      gens.push_back(exp_imaginary(2.0 * kPi / tag.parameter, 1, 0, 0));
      break;
    case GroupFamily::BinaryDihedral:
      if (tag.parameter < 2) throw Error(ErrorKind::InvalidParameter, "BinaryDihedral(m) needs m >= 2");
      gens.push_back(exp_imaginary(kPi / tag.parameter, 1, 0, 0));
      gens.push_back(Quaternion::j());
      break;
    case GroupFamily::BinaryTetrahedral:
    case GroupFamily::BinaryOctahedral:
    case GroupFamily::BinaryIcosahedral:
      for (const auto& e : exact_generators(tag)) gens.push_back(e.to_double());
      break;
    case GroupFamily::Unrecognized:
      throw Error(ErrorKind::InvalidParameter, "cannot construct an unrecognized group");
  }
  FiniteQuaternionGroup group = generate_closure(gens, tag.expected_order());
  if (group.order() != tag.expected_order()) {
    throw Error(ErrorKind::InvalidParameter,
                tag.name() + " closed to order " + std::to_string(group.order()));
  }
  return group;
}

namespace {

bool has_unique_involution(const CayleyTable& t) { return t.involutions().size() == 1; }

bool is_binary_dihedral(const CayleyTable& t, int m) {
  const int n = static_cast<int>(t.order());
  for (int a = 0; a < n; ++a) {
    if (t.element_order(a) != 2 * m) continue;
    std::vector<char> in_a(t.order(), 0);
    for (int k = 0; k < 2 * m; ++k) in_a[t.power(a, k)] = 1;
    const int a_inv = t.inverse(a);
    const int central = t.power(a, m);
    for (int b = 0; b < n; ++b) {
      if (in_a[b]) continue;
      if (t.product(t.product(b, a), t.inverse(b)) == a_inv && t.product(b, b) == central) return true;
    }
    // Every index-2 cyclic subgroup works equally well; one failure decides.
    return false;
  }
  return false;
}

}  // namespace

GroupType classify(const CayleyTable& t) {
  const std::size_t n = t.order();
  if (t.is_cyclic()) return GroupType::cyclic(static_cast<int>(n));
  if (n % 4 == 0 && n >= 8 && is_binary_dihedral(t, static_cast<int>(n / 4))) {
    return GroupType::binary_dihedral(static_cast<int>(n / 4));
  }
  if (!has_unique_involution(t)) return GroupType::unrecognized();
  if (n == 24 || n == 48) {
    const auto length = t.derived_length();
    const auto derived = t.derived_subgroup();
    if (n == 24 && length == 3 && derived.size() == 8) return GroupType::binary_tetrahedral();
    if (n == 48 && length == 4 && derived.size() == 24) return GroupType::binary_octahedral();
  }
  if (n == 120 && t.is_perfect()) return GroupType::binary_icosahedral();
  return GroupType::unrecognized();
}

GroupType classify(const FiniteQuaternionGroup& group) { return classify(group.cayley_table()); }

SpaceFormConstraints check_space_form_constraints(const CayleyTable& t) {
  SpaceFormConstraints r;
  const int n = static_cast<int>(t.order());

  // (a) every abelian subgroup generated by two commuting elements is cyclic:
  // |<a,b>| = ord(a) ord(b) / |<a> n <b>| must equal lcm(ord a, ord b).
  r.abelian_subgroups_cyclic = true;
  std::vector<char> in_b(t.order(), 0);
  for (int b = 0; b < n && r.abelian_subgroups_cyclic; ++b) {
    const long ob = t.element_order(b);
    for (int k = 0; k < ob; ++k) in_b[t.power(b, k)] = 1;
    for (int a = 0; a < b; ++a) {
      if (!t.commute(a, b)) continue;
      const long oa = t.element_order(a);
      long common = 0;
      int x = t.identity();
      for (long k = 0; k < oa; ++k) {
        if (in_b[x]) ++common;
        x = t.product(x, a);
      }
      if (std::lcm(oa, ob) * common != oa * ob) {
        r.abelian_subgroups_cyclic = false;
        break;
      }
    }
    for (int k = 0; k < ob; ++k) in_b[t.power(b, k)] = 0;
  }

  // (b) at most one involution, and it is central.
  const auto inv = t.involutions();
  r.involution_count = inv.size();
  r.unique_central_involution = inv.size() <= 1;
  if (inv.size() == 1) {
    for (int g = 0; g < n && r.unique_central_involution; ++g)
      r.unique_central_involution = t.commute(inv[0], g);
  }

  // (c) Sylow p-subgroups for odd p are cyclic iff some element has order p^k.
  r.odd_sylow_cyclic = true;
  std::size_t rest = t.order();
  while (rest % 2 == 0) rest /= 2;
  for (std::size_t p = 3; p <= rest; p += 2) {
    if (rest % p != 0) continue;
    std::size_t pk = 1;
    while (rest % p == 0) {
      rest /= p;
      pk *= p;
    }
    bool found = false;
    for (int g = 0; g < n && !found; ++g) found = static_cast<std::size_t>(t.element_order(g)) == pk;
    if (!found) r.odd_sylow_cyclic = false;
  }
  return r;
}

SpaceFormConstraints check_space_form_constraints(const FiniteQuaternionGroup& group) {
  return check_space_form_constraints(group.cayley_table());
}

bool transpose_conjugacy_holds(const FiniteQuaternionGroup& group) {
  // In the embedding q -> [[w+xi, y+zi], [-y+zi, w-xi]] the transpose of q is
  // the quaternion (w, x, -y, z).
  const auto& el = group.elements;
  for (const auto& a : el) {
    const Quaternion at{a.w, a.x, -a.y, a.z};
    if (group.find(at) < 0) continue;
    bool conjugate = false;
    for (const auto& g : el) {
      if ((g * a * g.conjugate()).distance(at) <= kDedupTolerance) {
        conjugate = true;
        break;
      }
    }
    if (!conjugate) continue;
    if (at.distance(a) > kDedupTolerance && at.distance(a.conjugate()) > kDedupTolerance) return false;
  }
  return true;
}

bool is_sl25(const CayleyTable& t) {
  return t.order() == 120 && t.is_perfect() && t.involutions().size() == 1;
}

bool is_sl25(const FiniteQuaternionGroup& group) {
  if (group.order() != 120) return false;
  return is_sl25(group.cayley_table());
}

std::vector<Mat> left_translation_matrices(const FiniteQuaternionGroup& group) {
  std::vector<Mat> out;
  out.reserve(group.order());
  for (const auto& q : group.elements) out.push_back(left_translation_matrix(q));
  return out;
}

}  // namespace cwb
