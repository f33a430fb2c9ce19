#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "cwb/berger.hpp"
#include "cwb/catalog.hpp"
#include "cwb/error.hpp"
#include "cwb/killing.hpp"
#include "cwb/reductive.hpp"
#include "cwb/weyl.hpp"
#include "oracles.hpp"

using namespace cwb;

namespace {

template <class F>
void expect_error(ErrorKind kind, F&& f) {
  try {
    f();
    FAIL() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

AlgebraElement hopf_direction(int n) {
  CMat eta = CMat::Zero(n, n);
  for (int k = 0; k + 1 < n; ++k) eta(k, k) = cplx(0.0, 1.0);
  eta(n - 1, n - 1) = cplx(0.0, -static_cast<double>(n - 1));
  return {eta / algebra_norm(eta)};
}

// u(1) in su(3) orthogonal to and commuting with the su(2) block.
std::vector<AlgebraElement> su3_u1() { return {hopf_direction(3)}; }

double max_cross_inner(const std::vector<AlgebraElement>& a, const std::vector<AlgebraElement>& b) {
  double m = 0.0;
  for (const auto& x : a)
    for (const auto& y : b) m = std::max(m, std::abs(algebra_inner(x.matrix, y.matrix)));
  return m;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

// --- reductive decompositions ---------------------------------------------------

TEST(Reductive, ComplementExamples) {
  const auto su2 = CompactGroupSpec::su(2);
  const auto m1 = reductive_complement(su2, su_diagonal_torus(2));
  EXPECT_EQ(m1.size(), 2u);
  const auto su3 = CompactGroupSpec::su(3);
  const auto h = su_block(3, 2);
  const auto m2 = reductive_complement(su3, h);
  EXPECT_EQ(m2.size(), 5u);
  EXPECT_LE(max_cross_inner(h, m2), 1e-12);
  const auto m3 = reductive_complement(CompactGroupSpec::so(5), principal_so3_in_so5());
  EXPECT_EQ(m3.size(), 7u);
}

TEST(Reductive, PrincipalSo3IsIrreducibleSubalgebra) {
  const auto h = principal_so3_in_so5();
  ASSERT_EQ(h.size(), 3u);
  EXPECT_LE(bracket_closure_defect(orthonormalize(h)), 1e-12);
  // Irreducible on R^5: nothing in so(5) outside the scalars commutes with it,
  // so the centralizer in so(5) is zero.
  const auto so5 = CompactGroupSpec::so(5);
  Mat stacked(3 * 10, 10);
  const auto basis = algebra_basis(so5);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 10; ++j) stacked.block(10 * i, j, 10, 1) = algebra_coords(basis, bracket(h[i].matrix, basis[j].matrix));
  EXPECT_EQ(null_space(stacked, 1e-8).cols(), 0);
}

TEST(Reductive, Errors) {
  const auto su3 = CompactGroupSpec::su(3);
  auto dependent = su_block(3, 2);
  dependent.push_back(dependent.front());
  expect_error(ErrorKind::NotASubalgebra, [&] { reductive_complement(su3, dependent); });
  // Two root vectors of su(3) whose bracket leaves their span.
  const auto basis = algebra_basis(su3);
  std::vector<AlgebraElement> not_closed;
  for (const auto& e : basis) {
    if (std::abs(e.matrix(0, 1)) > 0.1 && not_closed.empty()) not_closed.push_back(e);
    if (std::abs(e.matrix(1, 2)) > 0.1 && not_closed.size() == 1) {
      not_closed.push_back(e);
      break;
    }
  }
  ASSERT_EQ(not_closed.size(), 2u);
  expect_error(ErrorKind::NotASubalgebra, [&] { reductive_complement(su3, not_closed); });
  expect_error(ErrorKind::NotASubalgebra, [&] { reductive_complement(su3, {{CMat::Identity(3, 3)}}); });
}

TEST(Reductive, SpaceSpecValidation) {
  const auto su3 = CompactGroupSpec::su(3);
  const auto h = su_block(3, 2);
  const auto m = reductive_complement(su3, h);
  MetricBlock all;
  for (int i = 0; i < 5; ++i) all.indices.push_back(i);
  EXPECT_NO_THROW(HomogeneousSpaceSpec(su3, orthonormalize(h), m, {all}));
  MetricBlock negative = all;
  negative.coefficient = -1.0;
  expect_error(ErrorKind::InvalidCoefficients, [&] { HomogeneousSpaceSpec(su3, orthonormalize(h), m, {negative}); });
  MetricBlock partial;
  partial.indices = {0, 1};
  expect_error(ErrorKind::InvalidCoefficients, [&] { HomogeneousSpaceSpec(su3, orthonormalize(h), m, {partial}); });
}

TEST(Reductive, InvariantBlockMetricOnS5) {
  // m = C^2 (4 dims) + u(1) (1 dim) splits ad(su(2))-invariantly.
  const auto su3 = CompactGroupSpec::su(3);
  const auto h = orthonormalize(su_block(3, 2));
  auto m = reductive_complement(su3, h);
  std::vector<AlgebraElement> ordered;
  const auto u1 = su3_u1()[0];
  ordered.push_back(u1);
  for (const auto& e : m) {
    CMat v = e.matrix - algebra_inner(u1.matrix, e.matrix) * u1.matrix;
    for (const auto& o : std::vector<AlgebraElement>(ordered.begin() + 1, ordered.end()))
      v -= algebra_inner(o.matrix, v) * o.matrix;
    if (algebra_norm(v) > 1e-6) ordered.push_back({v / algebra_norm(v)});
  }
  ASSERT_EQ(ordered.size(), 5u);
  const HomogeneousSpaceSpec berger_like(su3, h, ordered, {{{0}, 0.25}, {{1, 2, 3, 4}, 1.0}});
  EXPECT_EQ(berger_like.dim(), 5);
  // A mixed block is not ad(h)-invariant.
  expect_error(ErrorKind::InvalidCoefficients,
               [&] { HomogeneousSpaceSpec(su3, h, ordered, {{{0, 1}, 0.25}, {{2, 3, 4}, 1.0}}); });
}

// --- isotropy splitting ---------------------------------------------------------

TEST(IsotropySplit, Examples) {
  const auto su3 = CompactGroupSpec::su(3);
  const auto a = check_isotropy_split(su3, su_block(3, 2), su3_u1());
  EXPECT_TRUE(a.commuting && a.orthogonal && a.nontrivial);
  EXPECT_TRUE(a.equal_rank);
  EXPECT_EQ(a.rank_k, 2);

  const auto so6 = CompactGroupSpec::so(6);
  const auto b = check_isotropy_split(so6, so_block(6, 0, 3), so_block(6, 3, 3));
  EXPECT_TRUE(b.conditions_hold());
  EXPECT_FALSE(b.equal_rank);
  EXPECT_EQ(b.rank_k, 2);
  EXPECT_EQ(b.rank_g, 3);

  const auto c = check_isotropy_split(su3, su_block(3, 2), su_block(3, 2));
  EXPECT_FALSE(c.orthogonal);
}

TEST(IsotropySplit, GrassmannianFamilies) {
  // SU(s+t) with S(U(s)U(t)) split as su(s) + u(1): equal rank.
  for (int n = 3; n <= 5; ++n) {
    const auto g = CompactGroupSpec::su(n);
    CMat u = CMat::Zero(n, n);
    for (int k = 0; k + 1 < n; ++k) u(k, k) = cplx(0.0, 1.0);
    u(n - 1, n - 1) = cplx(0.0, -(n - 1.0));
    const auto r = check_isotropy_split(g, su_block(n, n - 1), {{u / algebra_norm(u)}});
    EXPECT_TRUE(r.conditions_hold());
    EXPECT_TRUE(r.equal_rank) << n;
  }
}

TEST(Rank, NumericRankMatchesTheory) {
  Rng rng(1);
  for (const auto& spec : {CompactGroupSpec::su(2), CompactGroupSpec::su(3), CompactGroupSpec::su(4),
                           CompactGroupSpec::so(5), CompactGroupSpec::so(6), CompactGroupSpec::sp(2)}) {
    EXPECT_EQ(subalgebra_rank(spec, algebra_basis(spec), rng), spec.rank()) << spec.name();
  }
  EXPECT_EQ(subalgebra_rank(CompactGroupSpec::su(4), su_diagonal_torus(4), rng), 3);
  EXPECT_EQ(subalgebra_rank(CompactGroupSpec::so(5), principal_so3_in_so5(), rng), 1);
}

// --- Killing fields --------------------------------------------------------------

TEST(Killing, GroupManifoldFieldsAreConstant) {
  Rng rng(2);
  for (const auto& spec : {CompactGroupSpec::su(2), CompactGroupSpec::su(3), CompactGroupSpec::so(4)}) {
    const auto space = HomogeneousSpaceSpec::normal(spec, {});
    for (int t = 0; t < 5; ++t) {
      const auto xi = random_algebra_element(spec, rng);
      const auto p = killing_length_profile(space, xi, 500, rng);
      EXPECT_LE(p.relative_gap(), 1e-8);
      EXPECT_NEAR(p.mean, algebra_norm(xi.matrix), 1e-10);
      EXPECT_LE(p.gap(), 1e-10);
    }
  }
}

TEST(Killing, RotationFieldOnS2VanishesAtAxis) {
  const auto so3 = CompactGroupSpec::so(3);
  const auto space = HomogeneousSpaceSpec::normal(so3, so_block(3, 1, 2));
  const auto gen = KillingGenerator::left_field(space.isotropy_basis().front());
  EXPECT_NEAR(killing_length_at(space, gen, identity_element(so3)), 0.0, 1e-15);
  Rng rng(3);
  const auto p = killing_length_profile(space, gen, 500, rng);
  EXPECT_GT(p.max, 0.1);
  EXPECT_FALSE(is_constant_length(p));
}

TEST(Killing, HopfFieldsAreConstant) {
  Rng rng(4);
  const auto s3 = HomogeneousSpaceSpec::normal(CompactGroupSpec::su(2), {});
  const auto s5 = HomogeneousSpaceSpec::normal(CompactGroupSpec::su(3), su_block(3, 2));
  for (const auto* space : {&s3, &s5}) {
    const int n = space->group().matrix_dim();
    const auto p = killing_length_profile(*space, KillingGenerator::right_field(hopf_direction(n)), 1000, rng);
    EXPECT_LE(p.relative_gap(), 1e-8);
    EXPECT_GT(p.mean, 0.5);
  }
}

TEST(Killing, NoConstantLengthFieldOnSO5OverSO3) {
  Rng rng(5);
  const auto space = HomogeneousSpaceSpec::normal(CompactGroupSpec::so(5), principal_so3_in_so5());
  for (int t = 0; t < 20; ++t) {
    const auto p = killing_length_profile(space, random_algebra_element(space.group(), rng), 500, rng);
    EXPECT_GT(p.relative_gap(), 1e-3);
  }
}

TEST(Killing, ConjugationConsistency) {
  Rng rng(6);
  const auto space = HomogeneousSpaceSpec::normal(CompactGroupSpec::so(5), principal_so3_in_so5());
  for (int t = 0; t < 10; ++t) {
    const auto xi = random_algebra_element(space.group(), rng);
    const auto h = haar_element(space.group(), rng);
    const AlgebraElement moved{h.matrix * xi.matrix * h.matrix.adjoint()};
    std::vector<GroupElement> pts, moved_pts;
    for (int s = 0; s < 300; ++s) {
      const auto g = haar_element(space.group(), rng);
      pts.push_back(g);
      moved_pts.push_back({h.matrix * g.matrix});
    }
    const auto a = killing_length_profile_at(space, KillingGenerator::left_field(xi), pts);
    const auto b = killing_length_profile_at(space, KillingGenerator::left_field(moved), moved_pts);
    EXPECT_NEAR(a.min, b.min, 1e-8);
    EXPECT_NEAR(a.max, b.max, 1e-8);
  }
}

TEST(Killing, Errors) {
  const auto space = HomogeneousSpaceSpec::normal(CompactGroupSpec::su(3), su_block(3, 2));
  Rng rng(7);
  expect_error(ErrorKind::ZeroField,
               [&] { killing_length_profile(space, AlgebraElement{CMat::Zero(3, 3)}, 10, rng); });
  // A right generator must centralize the isotropy algebra.
  expect_error(ErrorKind::InvalidParameter, [&] {
    killing_length_profile(space, KillingGenerator::right_field(su_block(3, 2)[0]), 10, rng);
  });
}

// --- Weyl groups and Euler characteristics -------------------------------------

TEST(Weyl, Examples) {
  EXPECT_EQ(weyl_group_order(RootType::A, 2), 6u);
  EXPECT_EQ(weyl_group_order(RootType::B, 2), 8u);
  EXPECT_EQ(weyl_group_order(RootType::G2, 2), 12u);
}

TEST(Weyl, MatchesClosedFormOnFullRange) {
  for (auto type : {RootType::A, RootType::B, RootType::C, RootType::D}) {
    for (int r = type == RootType::D ? 2 : 1; r <= 8; ++r)
      EXPECT_EQ(weyl_group_order(type, r), weyl_order_closed_form(type, r)) << to_string(type) << r;
  }
  EXPECT_EQ(weyl_group_order(RootType::G2, 2), weyl_order_closed_form(RootType::G2, 2));
}

TEST(Weyl, MatchesRegularOrbitOracle) {
  for (auto [type, r] : std::vector<std::pair<RootType, int>>{{RootType::A, 1}, {RootType::A, 4}, {RootType::B, 3},
                                                              {RootType::C, 3}, {RootType::D, 4}, {RootType::G2, 2}}) {
    EXPECT_EQ(weyl_group_order(type, r), oracle::regular_orbit_size(simple_roots(type, r))) << to_string(type) << r;
  }
  // Hand count: the Weyl group of A_2 is the symmetric group on 3 letters.
  EXPECT_EQ(oracle::regular_orbit_size(simple_roots(RootType::A, 2)), 6u);
}

TEST(Weyl, Errors) {
  expect_error(ErrorKind::UnsupportedType, [] { weyl_group_order(RootType::A, 9); });
  expect_error(ErrorKind::UnsupportedType, [] { weyl_group_order(RootType::D, 1); });
  expect_error(ErrorKind::UnsupportedType, [] { weyl_group_order(RootType::G2, 3); });
  expect_error(ErrorKind::UnsupportedType, [] { parse_root_type("E"); });
}

TEST(Euler, Examples) {
  const auto su3 = LieFactor::simple(RootType::A, 2);
  const auto flag = euler_characteristic({su3}, {LieFactor::torus_of(2)});
  EXPECT_TRUE(flag.equal_rank);
  EXPECT_EQ(flag.value, 6);
  const auto cp2 = euler_characteristic({su3}, {LieFactor::simple(RootType::A, 1), LieFactor::torus_of(1)});
  EXPECT_TRUE(cp2.equal_rank);
  EXPECT_EQ(cp2.value, 3);
  const auto m7 = euler_characteristic({LieFactor::simple(RootType::B, 2)}, {LieFactor::simple(RootType::A, 1)});
  EXPECT_FALSE(m7.equal_rank);
  EXPECT_EQ(m7.value, 0);
  // S^6 = G2/SU(3): chi = 12 / 6 = 2.
  EXPECT_EQ(euler_characteristic({LieFactor::simple(RootType::G2, 2)}, {su3}).value, 2);
  // Even spheres S^{2n} = SO(2n+1)/SO(2n): chi = 2.
  for (int n = 2; n <= 6; ++n)
    EXPECT_EQ(euler_characteristic({LieFactor::simple(RootType::B, n)}, {LieFactor::simple(RootType::D, n)}).value, 2);
}

// --- Berger spheres ------------------------------------------------------------

TEST(Berger, Dimensions) {
  EXPECT_EQ(berger_right_isometry_algebra(1.0, 1.0).dimension, 3);
  EXPECT_EQ(berger_right_isometry_algebra(0.5, 1.0).dimension, 1);
  EXPECT_EQ(berger_right_isometry_algebra(0.25, 0.5).dimension, 0);
  expect_error(ErrorKind::InvalidCoefficients, [] { berger_right_isometry_algebra(0.0, 1.0); });
  expect_error(ErrorKind::InvalidCoefficients, [] { berger_right_isometry_algebra(0.5, 0.25); });
  expect_error(ErrorKind::InvalidCoefficients, [] { berger_right_isometry_algebra(0.5, 1.5); });
}

TEST(Berger, U1CaseIsTheDistinguishedAxis) {
  // With Q = diag(1, 1, a) the surviving direction is the third basis vector.
  const auto alg = berger_right_isometry_algebra(0.3, 1.0);
  ASSERT_EQ(alg.dimension, 1);
  EXPECT_NEAR(std::abs(alg.coords(2, 0)), 1.0, 1e-12);
  Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    const double a = std::uniform_real_distribution<double>(0.05, 0.9)(rng);
    const double b = std::uniform_real_distribution<double>(a + 0.05, 0.95)(rng);
    EXPECT_EQ(berger_right_isometry_algebra(a, b).dimension, 0);
  }
}

// --- center of gravity -----------------------------------------------------------

TEST(CenterOfGravity, Examples) {
  const Vec w = Eigen::Vector2d(1.0, 0.0);
  const std::vector<Mat> c3 = {rotation2(0), rotation2(2 * kPi / 3), rotation2(4 * kPi / 3)};
  EXPECT_LE(center_of_gravity(c3, w).norm(), 1e-15);
  const Vec v = Eigen::Vector3d(0.3, -2.0, 5.0);
  EXPECT_LE((center_of_gravity({Mat::Identity(3, 3)}, v) - v).norm(), 1e-15);
  Rng rng(9);
  const auto so2 = [](Rng& r) { return Mat(rotation2(std::uniform_real_distribution<double>(0.0, 2 * kPi)(r))); };
  EXPECT_LE(center_of_gravity(so2, w, 10000, rng).norm(), 0.02);
  expect_error(ErrorKind::ZeroVector, [&] { center_of_gravity(c3, Vec::Zero(2)); });
  expect_error(ErrorKind::InvalidParameter, [&] { center_of_gravity(so2, w, 100, rng); });
}

TEST(CenterOfGravity, StatisticalBound) {
  const Vec w = Eigen::Vector2d(1.0, 0.0);
  const auto so2 = [](Rng& r) { return Mat(rotation2(std::uniform_real_distribution<double>(0.0, 2 * kPi)(r))); };
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Rng rng(seed);
    for (std::size_t n : {10000u, 40000u}) EXPECT_LE(center_of_gravity(so2, w, n, rng).norm(), 2.0 / std::sqrt(double(n)));
  }
  Rng rng(11);
  const Vec x = Eigen::Vector4d(1, 2, 0, -1);
  EXPECT_LE(center_of_gravity(CompactGroupSpec::su(2), x, 10000, rng).norm(), 0.1);
}

// --- catalog ---------------------------------------------------------------------

TEST(Catalog, LoadsBundledFile) {
  const auto entries = catalog_load(default_catalog_path());
  ASSERT_EQ(entries.size(), 19u);
  for (int i = 0; i < 19; ++i) EXPECT_EQ(entries[i].id, i + 1);
  EXPECT_EQ(catalog_find(entries, 10).group, "SO(5)");
  EXPECT_EQ(catalog_find(entries, 10).isotropy, "SO(3)");
  EXPECT_EQ(catalog_find(entries, 4).group, "F4");
  EXPECT_EQ(catalog_find(entries, 17).isometry_group, "O(4)");
  for (const auto& e : entries) EXPECT_FALSE(e.checks.empty());
}

TEST(Catalog, ParseErrors) {
  const std::string header = "id\tname\tG\tH\tisometry_group\tfibration\tchecks\n";
  const auto bad_fields = write_temp("cwb_bad_fields.tsv", header + "1\tS^n\tSO(n+1)\n");
  try {
    catalog_load(bad_fields);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find(":2:"), std::string::npos) << e.what();
  }
  const auto dup = write_temp("cwb_dup.tsv", header + "1\ta\tb\tc\td\t-\tinformational\n1\ta\tb\tc\td\t-\tinformational\n");
  expect_error(ErrorKind::ParseError, [&] { catalog_load(dup); });
  const auto unknown = write_temp("cwb_unknown.tsv", header + "1\ta\tb\tc\td\t-\tmagic\n");
  expect_error(ErrorKind::ParseError, [&] { catalog_load(unknown); });
  const auto no_header = write_temp("cwb_noheader.tsv", "1\ta\tb\tc\td\t-\tinformational\n");
  expect_error(ErrorKind::ParseError, [&] { catalog_load(no_header); });
  expect_error(ErrorKind::ParseError, [] { catalog_load("/nonexistent/catalog.tsv"); });
}

TEST(Catalog, VerifyDispatch) {
  const auto entries = catalog_load(default_catalog_path());
  const auto r10 = catalog_verify(catalog_find(entries, 10), 42, 300);
  EXPECT_EQ(r10.status, CatalogStatus::Pass);
  EXPECT_GT(r10.evidence["killing-none"]["min_relative_gap"].get<double>(), 1e-3);
  const auto r4 = catalog_verify(catalog_find(entries, 4), 42, 300);
  EXPECT_EQ(r4.status, CatalogStatus::Informational);
  EXPECT_EQ(r4.record["G"], "F4");
  EXPECT_EQ(catalog_verify(catalog_find(entries, 17), 42, 300).status, CatalogStatus::Pass);
  EXPECT_EQ(catalog_verify(catalog_find(entries, 1), 42, 300).status, CatalogStatus::Pass);
  EXPECT_EQ(catalog_verify(catalog_find(entries, 15), 42, 300).status, CatalogStatus::Pass);
  expect_error(ErrorKind::InvalidParameter, [&] { catalog_find(entries, 20); });
}
