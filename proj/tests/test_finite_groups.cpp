#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "cwb/constant_curvature.hpp"
#include "cwb/error.hpp"
#include "cwb/finite_groups.hpp"
#include "oracles.hpp"

using namespace cwb;

namespace {

std::vector<GroupType> all_tags() {
  std::vector<GroupType> tags;
  for (int n = 1; n <= 12; ++n) tags.push_back(GroupType::cyclic(n));
  for (int m = 2; m <= 12; ++m) tags.push_back(GroupType::binary_dihedral(m));
  tags.push_back(GroupType::binary_tetrahedral());
  tags.push_back(GroupType::binary_octahedral());
  tags.push_back(GroupType::binary_icosahedral());
  return tags;
}

Quaternion random_quaternion(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return Quaternion(n(rng), n(rng), n(rng), n(rng));
}

template <class F>
void expect_error(ErrorKind kind, F&& f) {
  try {
    f();
    FAIL() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

}  // namespace

TEST(Quaternion, HamiltonRules) {
  const auto i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  EXPECT_EQ((i * j).coeffs(), k.coeffs());
  EXPECT_EQ((j * k).coeffs(), i.coeffs());
  EXPECT_EQ((k * i).coeffs(), j.coeffs());
  EXPECT_EQ((i * i).coeffs(), (-Quaternion::identity()).coeffs());
  EXPECT_EQ((i * j * k).coeffs(), (-Quaternion::identity()).coeffs());
}

TEST(Quaternion, AssociativeOnRandomTriples) {
  Rng rng(1);
  for (int t = 0; t < 1000; ++t) {
    const auto a = random_quaternion(rng).normalized(), b = random_quaternion(rng).normalized(),
               c = random_quaternion(rng).normalized();
    EXPECT_LE(((a * b) * c).distance(a * (b * c)), 1e-12);
  }
}

TEST(Quaternion, UnitProductsStayUnit) {
  Rng rng(2);
  for (int t = 0; t < 1000; ++t) {
    const auto a = random_quaternion(rng).normalized(), b = random_quaternion(rng).normalized();
    EXPECT_LE(std::abs((a * b).norm_sq() - 1.0), 1e-12);
    EXPECT_LE((a * a.inverse()).distance(Quaternion::identity()), 1e-12);
  }
}

TEST(Quaternion, ExactGeneratorsAreExactlyUnit) {
  for (const auto& q : {hurwitz_generator(), octahedral_generator(), icosian_generator()}) EXPECT_TRUE(q.is_unit());
  ExactQuaternion p = hurwitz_generator();
  for (int k = 1; k < 6; ++k) p = p * hurwitz_generator();
  EXPECT_EQ(p.w, Surd::rational(1));
  EXPECT_TRUE(p.x == Surd::rational(0) && p.y == Surd::rational(0) && p.z == Surd::rational(0));
  EXPECT_EQ(golden_ratio() * golden_ratio_inverse(), Surd::rational(1));
  EXPECT_EQ(golden_ratio() - golden_ratio_inverse(), Surd::rational(1));
}

TEST(LeftTranslation, Examples) {
  EXPECT_LE(max_abs(Mat(left_translation_matrix(Quaternion::identity()) - Mat::Identity(4, 4))), 1e-15);
  EXPECT_LE(max_abs(Mat(left_translation_matrix(-Quaternion::identity()) + Mat::Identity(4, 4))), 1e-15);
  const auto angles = eigen_rotation_angles(OrthogonalMap(left_translation_matrix(Quaternion::i())));
  ASSERT_EQ(angles.size(), 4u);
  for (double a : angles) EXPECT_NEAR(a, kPi / 2, 1e-12);
  expect_error(ErrorKind::NonUnitInput, [] { left_translation_matrix(Quaternion(1, 1, 0, 0)); });
  expect_error(ErrorKind::NonUnitInput, [] { right_translation_matrix(Quaternion(0.5, 0, 0, 0)); });
}

TEST(LeftTranslation, OrthogonalHomomorphism) {
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto p = random_quaternion(rng).normalized(), q = random_quaternion(rng).normalized();
    const Mat lp = left_translation_matrix(p), lq = left_translation_matrix(q);
    EXPECT_LE(max_abs(Mat(lp.transpose() * lp - Mat::Identity(4, 4))), 1e-12);
    EXPECT_NEAR(lp.determinant(), 1.0, 1e-12);
    EXPECT_LE(max_abs(Mat(left_translation_matrix(p * q) - lp * lq)), 1e-12);
    // x -> p x and x -> x q commute.
    const Mat rq = right_translation_matrix(q);
    EXPECT_LE(max_abs(Mat(lp * rq - rq * lp)), 1e-12);
    // Action on coordinates agrees with the product.
    const auto x = random_quaternion(rng);
    const Vec px = lp * Vec(Eigen::Vector4d(x.w, x.x, x.y, x.z));
    const auto prod = p * x;
    EXPECT_LE((px - Vec(Eigen::Vector4d(prod.w, prod.x, prod.y, prod.z))).norm(), 1e-12);
    EXPECT_LE(max_abs(CMat(su2_matrix(p * q) - su2_matrix(p) * su2_matrix(q))), 1e-12);
  }
}

TEST(Closure, Examples) {
  EXPECT_EQ(generate_closure({Quaternion::identity()}, 10).order(), 1u);
  const auto q8 = generate_closure({Quaternion::i(), Quaternion::j()}, 100);
  ASSERT_EQ(q8.order(), 8u);
  // Hand enumeration: +-1, +-i, +-j, +-k.
  const std::vector<Quaternion> hand = {{1, 0, 0, 0},  {-1, 0, 0, 0}, {0, 1, 0, 0}, {0, -1, 0, 0},
                                        {0, 0, 1, 0},  {0, 0, -1, 0}, {0, 0, 0, 1}, {0, 0, 0, -1}};
  for (const auto& q : hand) EXPECT_GE(q8.find(q), 0);
  const auto icosian = generate_closure({hurwitz_generator().to_double(), icosian_generator().to_double()}, 1000);
  EXPECT_EQ(icosian.order(), 120u);
  EXPECT_LE(icosian.elements[0].distance(Quaternion::identity()), 1e-15);
}

TEST(Closure, Errors) {
  expect_error(ErrorKind::NonUnitGenerator, [] { generate_closure({Quaternion(1, 1e-3, 0, 0)}, 10); });
  expect_error(ErrorKind::ClosureExceedsLimit, [] { generate_closure({exp_imaginary(1.0, 1, 0, 0)}, 500); });
  expect_error(ErrorKind::InvalidParameter, [] { generate_closure({Quaternion::i()}, 0); });
  expect_error(ErrorKind::ClosureExceedsLimit, [] { generate_closure({Quaternion::i(), Quaternion::j()}, 7); });
}

TEST(Closure, LagrangeForSubgroupClosures) {
  const auto big = named_binary_group(GroupType::binary_icosahedral());
  Rng rng(4);
  std::uniform_int_distribution<std::size_t> pick(0, big.order() - 1);
  for (int t = 0; t < 40; ++t) {
    const auto sub = generate_closure({big.elements[pick(rng)]}, 200);
    EXPECT_EQ(big.order() % sub.order(), 0u);
    const auto sub2 = generate_closure({big.elements[pick(rng)], big.elements[pick(rng)]}, 200);
    EXPECT_EQ(big.order() % sub2.order(), 0u);
    for (const auto& q : sub2.elements) EXPECT_GE(big.find(q), 0);
  }
}

TEST(NamedGroups, OrdersAndErrors) {
  EXPECT_EQ(named_binary_group(GroupType::binary_dihedral(3)).order(), 12u);
  EXPECT_EQ(named_binary_group(GroupType::binary_tetrahedral()).order(), 24u);
  EXPECT_EQ(named_binary_group(GroupType::binary_octahedral()).order(), 48u);
  EXPECT_EQ(named_binary_group(GroupType::binary_icosahedral()).order(), 120u);
  for (const auto& tag : all_tags()) EXPECT_EQ(named_binary_group(tag).order(), tag.expected_order()) << tag.name();
  expect_error(ErrorKind::InvalidParameter, [] { named_binary_group(GroupType::binary_dihedral(1)); });
  expect_error(ErrorKind::InvalidParameter, [] { named_binary_group(GroupType::cyclic(0)); });
}

TEST(NamedGroups, ClosedUnderProductAndInverse) {
  for (const auto& tag : all_tags()) {
    const auto g = named_binary_group(tag);
    for (const auto& a : g.elements) {
      EXPECT_GE(g.find(a.conjugate()), 0);
      for (const auto& b : g.elements) ASSERT_GE(g.find(a * b), 0) << tag.name();
    }
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(generate_closure({Quaternion::i(), Quaternion::j()}, 100)), GroupType::binary_dihedral(2));
  EXPECT_EQ(classify(generate_closure({exp_imaginary(kPi / 5, 1, 0, 0)}, 100)), GroupType::cyclic(10));
  EXPECT_EQ(classify(named_binary_group(GroupType::binary_icosahedral())), GroupType::binary_icosahedral());
}

TEST(Classify, RoundTripsEveryTag) {
  for (const auto& tag : all_tags()) EXPECT_EQ(classify(named_binary_group(tag)), tag) << tag.name();
  EXPECT_EQ(classify(named_binary_group(GroupType::binary_dihedral(30))), GroupType::binary_dihedral(30));
  EXPECT_EQ(classify(named_binary_group(GroupType::cyclic(120))), GroupType::cyclic(120));
}

TEST(Classify, AbstractTables) {
  EXPECT_EQ(classify(klein_four_table()), GroupType::unrecognized());
  EXPECT_EQ(classify(cyclic_table(7)), GroupType::cyclic(7));
  EXPECT_EQ(classify(sl25_table()), GroupType::binary_icosahedral());
}

TEST(SpaceForm, Examples) {
  const auto istar = check_space_form_constraints(named_binary_group(GroupType::binary_icosahedral()));
  EXPECT_TRUE(istar.abelian_subgroups_cyclic);
  EXPECT_TRUE(istar.unique_central_involution);
  EXPECT_TRUE(istar.odd_sylow_cyclic);
  EXPECT_EQ(istar.involution_count, 1u);
  EXPECT_FALSE(check_space_form_constraints(klein_four_table()).abelian_subgroups_cyclic);
  EXPECT_TRUE(check_space_form_constraints(named_binary_group(GroupType::cyclic(12))).all());
  for (const auto& tag : all_tags()) EXPECT_TRUE(check_space_form_constraints(named_binary_group(tag)).all()) << tag.name();
}

TEST(SpaceForm, InvolutionIsMinusOne) {
  const auto g = named_binary_group(GroupType::binary_octahedral());
  const auto table = g.cayley_table();
  const auto inv = table.involutions();
  ASSERT_EQ(inv.size(), 1u);
  EXPECT_LE(g.elements[inv[0]].distance(-Quaternion::identity()), 1e-12);
}

TEST(SL25, Recognition) {
  EXPECT_TRUE(is_sl25(named_binary_group(GroupType::binary_icosahedral())));
  EXPECT_FALSE(is_sl25(named_binary_group(GroupType::binary_dihedral(30))));
  EXPECT_FALSE(is_sl25(named_binary_group(GroupType::cyclic(120))));
  EXPECT_TRUE(is_sl25(sl25_table()));
}

TEST(SL25, ExplicitIsomorphismWithBinaryIcosahedral) {
  const auto g = named_binary_group(GroupType::binary_icosahedral());
  std::vector<int> gens;
  for (const auto& q : g.generators) gens.push_back(g.find(q));
  const auto phi = oracle::find_isomorphism(g.cayley_table(), gens, sl25_table());
  ASSERT_TRUE(phi.has_value());
  // No isomorphism to the binary dihedral group of the same order.
  const auto d = named_binary_group(GroupType::binary_dihedral(30));
  std::vector<int> dgens;
  for (const auto& q : d.generators) dgens.push_back(d.find(q));
  EXPECT_FALSE(oracle::find_isomorphism(d.cayley_table(), dgens, sl25_table()).has_value());
}

TEST(SpaceForm, LeftTranslationsFreeAndClifford) {
  for (const auto& tag : all_tags()) {
    const auto mats = left_translation_matrices(named_binary_group(tag));
    for (std::size_t e = 1; e < mats.size(); ++e) {
      Eigen::EigenSolver<Mat> es(mats[e]);
      for (int k = 0; k < 4; ++k) EXPECT_GT(std::abs(es.eigenvalues()(k) - 1.0), 1e-9) << tag.name();
      EXPECT_TRUE(is_clifford_sphere(OrthogonalMap(mats[e]), 1e-9).clifford) << tag.name();
    }
  }
}

// Oracle: literal 2x2 complex transposes, conjugacy by brute force over the group.
static bool transpose_conjugacy_oracle(const FiniteQuaternionGroup& group) {
  std::vector<CMat> mats;
  for (const auto& q : group.elements) mats.push_back(su2_matrix(q));
  auto index_of = [&](const CMat& m) {
    for (std::size_t i = 0; i < mats.size(); ++i)
      if ((mats[i] - m).cwiseAbs().maxCoeff() <= 1e-9) return static_cast<int>(i);
    return -1;
  };
  for (const auto& a : mats) {
    const CMat at = a.transpose();
    if (index_of(at) < 0) continue;
    bool conjugate = false;
    for (const auto& g : mats) conjugate = conjugate || (g * a * g.adjoint() - at).cwiseAbs().maxCoeff() <= 1e-9;
    if (conjugate && (at - a).cwiseAbs().maxCoeff() > 1e-9 && (at - a.adjoint()).cwiseAbs().maxCoeff() > 1e-9)
      return false;
  }
  return true;
}

TEST(SpaceForm, TransposeConjugacyInStandardEmbedding) {
  for (const auto& tag : all_tags()) {
    const auto g = named_binary_group(tag);
    EXPECT_EQ(transpose_conjugacy_holds(g), transpose_conjugacy_oracle(g)) << tag.name();
  }
  EXPECT_TRUE(transpose_conjugacy_holds(named_binary_group(GroupType::binary_dihedral(2))));
  EXPECT_TRUE(transpose_conjugacy_holds(named_binary_group(GroupType::binary_tetrahedral())));
  // e^{i pi/4} j and its transpose e^{3 i pi/4} j are conjugate by e^{i pi/4} in D*4.
  EXPECT_FALSE(transpose_conjugacy_holds(named_binary_group(GroupType::binary_dihedral(4))));
}

TEST(Cayley, ValidationAndInvariants) {
  expect_error(ErrorKind::InvalidParameter, [] { CayleyTable(2, {0, 1, 1, 1}); });
  const auto s = sl25_table();
  EXPECT_EQ(s.order(), 120u);
  EXPECT_TRUE(s.is_perfect());
  EXPECT_FALSE(s.derived_length().has_value());
  EXPECT_EQ(s.center().size(), 2u);
  const auto t = named_binary_group(GroupType::binary_tetrahedral()).cayley_table();
  EXPECT_EQ(t.derived_length(), 3);
  EXPECT_EQ(t.derived_subgroup().size(), 8u);
  const auto o = named_binary_group(GroupType::binary_octahedral()).cayley_table();
  EXPECT_EQ(o.derived_length(), 4);
  EXPECT_EQ(o.derived_subgroup().size(), 24u);
  EXPECT_TRUE(cyclic_table(9).is_cyclic());
  EXPECT_FALSE(klein_four_table().is_cyclic());
  EXPECT_TRUE(klein_four_table().is_abelian());
}
