#include "cwb/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cwb/berger.hpp"
#include "cwb/catalog.hpp"
#include "cwb/constant_curvature.hpp"
#include "cwb/error.hpp"
#include "cwb/finite_groups.hpp"
#include "cwb/killing.hpp"
#include "cwb/quaternion.hpp"
#include "cwb/reductive.hpp"
#include "cwb/report_json.hpp"
#include "cwb/verifier.hpp"

#ifndef CWB_DATA_DIR
#define CWB_DATA_DIR "data"
#endif

namespace cwb {

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 42;
constexpr int kMaxCyclicPowers = 10000;

struct Options {
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 1000;
  double tol = 1e-7;
  std::string output;
  std::string catalog;

  std::string model = "s3";
  std::string group;
  int m = 0;
  int lens = 0;
  std::vector<int> exponents;
  std::string matrix_file;

  std::string space = "so5-so3";
  std::string direction = "random";
  double a = 1.0;
  double b = 1.0;

  std::string geometry = "euclidean";
  double angle = 0.0;
  std::vector<double> translation;
  std::vector<double> sl2;
  std::vector<double> radii = {1.0, 2.0, 4.0, 8.0};

  int entry_id = 0;
};

struct Outcome {
  json inputs = json::object();
  json evidence = json::object();
  json tolerances = json::object();
  std::string verdict;
  bool pass = true;
};

[[noreturn]] void usage(const std::string& msg) { throw Error(ErrorKind::UsageError, msg); }

// --- input parsing -------------------------------------------------------------

std::string resolve_data_file(const std::string& path) {
  namespace fs = std::filesystem;
  if (fs::exists(path) || fs::path(path).is_absolute()) return path;
  const fs::path bundled = fs::path(CWB_DATA_DIR) / path;
  return fs::exists(bundled) ? bundled.string() : path;
}

double parse_real(const std::string& token, const std::string& where) {
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used == token.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::ParseError, where + ": invalid number '" + token + "'");
}

// First line n, then n rows of n entries; an entry "re,im" makes the matrix
// complex, and complex matrices are realified.
Mat read_matrix_file(const std::string& path) {
  const std::string resolved = resolve_data_file(path);
  std::ifstream in(resolved);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open matrix file");
  std::string line;
  int lineno = 0;
  int n = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    const double v = parse_real(tok, path + ":" + std::to_string(lineno));
    n = static_cast<int>(v);
    if (v != n || n < 1) throw Error(ErrorKind::ParseError, path + ":" + std::to_string(lineno) + ": bad dimension");
    break;
  }
  if (n == 0) throw Error(ErrorKind::ParseError, path + ": empty matrix file");
  CMat m(n, n);
  bool complex = false;
  int row = 0;
  while (row < n && std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    const std::string where = path + ":" + std::to_string(lineno);
    if (static_cast<int>(toks.size()) != n) {
      throw Error(ErrorKind::ParseError, where + ": expected " + std::to_string(n) + " entries");
    }
    for (int c = 0; c < n; ++c) {
      const auto comma = toks[c].find(',');
      if (comma == std::string::npos) {
        m(row, c) = parse_real(toks[c], where);
      } else {
        complex = true;
        m(row, c) = cplx(parse_real(toks[c].substr(0, comma), where), parse_real(toks[c].substr(comma + 1), where));
      }
    }
    ++row;
  }
  if (row != n) throw Error(ErrorKind::ParseError, path + ": expected " + std::to_string(n) + " rows");
  return complex ? realify(m) : Mat(m.real());
}

GroupType parse_group_tag(const std::string& tag, int m) {
  static const std::regex with_param(R"((cyclic|binary-dihedral)(?:-(\d+))?)");
  std::smatch match;
  if (std::regex_match(tag, match, with_param)) {
    const int p = match[2].matched ? std::stoi(match[2].str()) : m;
    if (p <= 0) usage(tag + " needs a parameter (e.g. " + match[1].str() + "-5 or --m 5)");
    return match[1].str() == "cyclic" ? GroupType::cyclic(p) : GroupType::binary_dihedral(p);
  }
  if (tag == "binary-tetrahedral") return GroupType::binary_tetrahedral();
  if (tag == "binary-octahedral") return GroupType::binary_octahedral();
  if (tag == "binary-icosahedral") return GroupType::binary_icosahedral();
  usage("unknown group '" + tag + "'");
}

Model parse_model(const std::string& name) {
  static const std::regex pattern(R"(([a-z]+)(\d+))");
  std::smatch match;
  if (!std::regex_match(name, match, pattern)) usage("unknown model '" + name + "'");
  const std::string fam = match[1].str();
  const int n = std::stoi(match[2].str());
  if (fam == "s") return Model::sphere(n);
  if (fam == "su") return Model::group_manifold(CompactGroupSpec::su(n));
  if (fam == "so") return Model::group_manifold(CompactGroupSpec::so(n));
  if (fam == "sp") return Model::group_manifold(CompactGroupSpec::sp(n));
  usage("unknown model '" + name + "'");
}

json describe_source(const Options& o) {
  json j = json::object();
  if (!o.group.empty()) j["group"] = o.group;
  if (o.m) j["m"] = o.m;
  if (o.lens) {
    j["lens"] = o.lens;
    j["exponents"] = o.exponents;
  }
  if (!o.matrix_file.empty()) j["matrix_file"] = o.matrix_file;
  return j;
}

void require_one_source(const Options& o) {
  const int sources = (!o.group.empty()) + (o.lens != 0) + (!o.matrix_file.empty());
  if (sources != 1) usage("give exactly one of --group, --lens or --matrix-file");
  if (o.lens && o.exponents.empty()) usage("--lens needs --exponents");
}

std::vector<OrthogonalMap> cyclic_closure(const OrthogonalMap& g, double tol) {
  std::vector<OrthogonalMap> out{OrthogonalMap(Mat::Identity(g.ambient_dim(), g.ambient_dim()))};
  OrthogonalMap p = g;
  for (int k = 1; k < kMaxCyclicPowers; ++k) {
    if (max_abs(Mat(p.matrix() - out.front().matrix())) <= tol) return out;
    out.push_back(p);
    p = OrthogonalMap(p.matrix() * g.matrix(), 1e-8);
  }
  throw Error(ErrorKind::NotClosed, "matrix does not generate a finite cyclic group of order < 10000");
}

// Elements acting on the sphere model; a single matrix yields just itself
// unless `close` asks for the cyclic group it generates.
std::vector<OrthogonalMap> sphere_elements(const Options& o, const Model& model, bool close) {
  require_one_source(o);
  std::vector<OrthogonalMap> out;
  if (!o.matrix_file.empty()) {
    OrthogonalMap g(read_matrix_file(o.matrix_file), 1e-8);
    out = close ? cyclic_closure(g, 1e-8) : std::vector<OrthogonalMap>{g};
  } else if (o.lens) {
    out = lens_group(o.lens, o.exponents);
  } else if (o.group == "antipodal") {
    const int d = model.sphere_dim + 1;
    out = {OrthogonalMap(Mat::Identity(d, d)), OrthogonalMap(-Mat::Identity(d, d))};
  } else {
    for (const auto& m : left_translation_matrices(named_binary_group(parse_group_tag(o.group, o.m))))
      out.emplace_back(m);
  }
  if (out.front().ambient_dim() != model.sphere_dim + 1) {
    throw Error(ErrorKind::ModelMismatch, "elements act on R^" + std::to_string(out.front().ambient_dim()) +
                                              ", not on the ambient space of " + model.name());
  }
  return out;
}

DeckGroup group_manifold_elements(const Options& o, const Model& model) {
  const auto& spec = *model.group;
  DeckGroup g;
  const int d = spec.matrix_dim();
  const GroupElement id{CMat::Identity(d, d)};
  if (o.group == "center") {
    for (const auto& z : center_elements(spec)) g.elements.emplace_back(TwoSidedIsometry{z, id, false});
    return g;
  }
  if (o.group.empty() || o.lens || !o.matrix_file.empty()) {
    usage("group-manifold models take --group center or a binary group tag (su2 only)");
  }
  if (spec != CompactGroupSpec::su(2)) usage("binary groups act on the su2 model only");
  for (const auto& q : named_binary_group(parse_group_tag(o.group, o.m)).elements)
    g.elements.emplace_back(TwoSidedIsometry{{su2_matrix(q.conjugate())}, id, false});
  return g;
}

// --- commands -----------------------------------------------------------------

Outcome cmd_construct(const Options& o) {
  if (o.group.empty()) usage("construct needs --group");
  const GroupType tag = parse_group_tag(o.group, o.m);
  const auto group = named_binary_group(tag);
  const GroupType recognized = classify(group);
  const auto constraints = check_space_form_constraints(group);
  Outcome r;
  r.inputs = {{"group", o.group}};
  if (o.m) r.inputs["m"] = o.m;
  r.evidence = {{"tag", tag.name()},
                {"order", group.order()},
                {"expected_order", tag.expected_order()},
                {"classified_as", recognized.name()},
                {"space_form_constraints", to_json(constraints)},
                {"is_sl25", is_sl25(group)}};
  r.pass = recognized == tag && group.order() == static_cast<std::size_t>(tag.expected_order()) && constraints.all();
  r.verdict = r.pass ? "Recognized" : "Mismatch";
  return r;
}

Outcome cmd_check_clifford(const Options& o) {
  const Model model = parse_model(o.model);
  if (model.kind != ModelKind::Sphere) usage("check-clifford works on sphere models");
  const auto elements = sphere_elements(o, model, false);
  Rng rng(o.seed);
  Outcome r;
  r.inputs = describe_source(o);
  r.inputs["model"] = o.model;
  json per = json::array();
  bool all = true;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto c = is_clifford_sphere(elements[i], o.tol);
    json e = to_json(c);
    e["id"] = i;
    e["rotation_angles"] = eigen_rotation_angles(elements[i]);
    e["sampled_profile"] = to_json(sphere_profile(elements[i], o.samples, rng));
    per.push_back(e);
    all = all && c.clifford;
  }
  r.evidence = {{"elements", per}, {"all_clifford", all}};
  r.pass = all;
  r.verdict = all ? "CliffordTranslation" : "NotConstantDisplacement";
  return r;
}

Outcome cmd_check_free(const Options& o) {
  const Model model = parse_model(o.model);
  Outcome r;
  r.inputs = describe_source(o);
  r.inputs["model"] = o.model;
  if (model.kind == ModelKind::Sphere) {
    const auto elements = sphere_elements(o, model, true);
    const auto fr = is_free_on_sphere(elements, o.tol);
    r.evidence = {{"order", elements.size()}, {"free", fr.free}};
    r.evidence["fixed_point_element"] = fr.offender ? json(*fr.offender) : json(nullptr);
    r.pass = fr.free;
  } else {
    VerifyConfig cfg;
    cfg.seed = o.seed;
    cfg.samples = o.samples;
    cfg.tol = o.tol;
    const auto rep = verify_instance(group_manifold_elements(o, model), model, cfg);
    r.evidence = {{"order", rep.group_order}, {"free", rep.free}};
    r.evidence["fixed_point_element"] = rep.fixed_point_element ? json(*rep.fixed_point_element) : json(nullptr);
    r.pass = rep.free;
  }
  r.verdict = r.pass ? "Free" : "NotFree";
  return r;
}

Outcome cmd_check_killing(const Options& o) {
  std::optional<HomogeneousSpaceSpec> space;
  std::optional<AlgebraElement> hopf;
  const auto hopf_direction = [](int n) {
    CMat eta = CMat::Zero(n, n);
    for (int k = 0; k + 1 < n; ++k) eta(k, k) = cplx(0.0, 1.0);
    eta(n - 1, n - 1) = cplx(0.0, -static_cast<double>(n - 1));
    return AlgebraElement{eta / algebra_norm(eta)};
  };
  if (o.space == "su2" || o.space == "su3") {
    space = HomogeneousSpaceSpec::normal(CompactGroupSpec::su(o.space == "su2" ? 2 : 3), {});
  } else if (o.space == "s2") {
    space = HomogeneousSpaceSpec::normal(CompactGroupSpec::so(3), so_block(3, 1, 2));
  } else if (o.space == "s3-hopf") {
    space = HomogeneousSpaceSpec::normal(CompactGroupSpec::su(2), {});
    hopf = hopf_direction(2);
  } else if (o.space == "s5-hopf") {
    space = HomogeneousSpaceSpec::normal(CompactGroupSpec::su(3), su_block(3, 2));
    hopf = hopf_direction(3);
  } else if (o.space == "so5-so3") {
    space = HomogeneousSpaceSpec::normal(CompactGroupSpec::so(5), principal_so3_in_so5());
  } else {
    usage("unknown space '" + o.space + "' (su2, su3, s2, s3-hopf, s5-hopf, so5-so3)");
  }

  Rng rng(o.seed);
  KillingGenerator gen;
  if (o.direction == "random") {
    gen = KillingGenerator::left_field(random_algebra_element(space->group(), rng));
  } else if (o.direction == "hopf") {
    if (!hopf) usage("--direction hopf needs s3-hopf or s5-hopf");
    gen = KillingGenerator::right_field(*hopf);
  } else if (o.direction == "isotropy") {
    if (space->isotropy_basis().empty()) usage("the space has trivial isotropy");
    gen = KillingGenerator::left_field(space->isotropy_basis().front());
  } else {
    usage("unknown direction '" + o.direction + "' (random, hopf, isotropy)");
  }

  const auto p = killing_length_profile(*space, gen, o.samples, rng);
  Outcome r;
  r.inputs = {{"space", o.space}, {"direction", o.direction}};
  r.evidence = {{"group", space->group().name()},
                {"dim", space->dim()},
                {"profile", to_json(p)},
                {"relative_gap", p.relative_gap()}};
  if (o.space == "so5-so3") r.evidence["assumption"] = "de Rham irreducibility is assumed, not verified";
  r.tolerances["killing_relative_gap"] = kKillingConstantTol;
  r.pass = is_constant_length(p);
  r.verdict = r.pass ? "ConstantLength" : "NotConstantLength";
  return r;
}

Outcome cmd_check_berger(const Options& o) {
  const auto alg = berger_right_isometry_algebra(o.a, o.b);
  Outcome r;
  r.inputs = {{"a", o.a}, {"b", o.b}};
  json basis = json::array();
  for (int c = 0; c < alg.coords.cols(); ++c) {
    json col = json::array();
    for (int k = 0; k < alg.coords.rows(); ++k) col.push_back(alg.coords(k, c));
    basis.push_back(col);
  }
  r.evidence = {{"dimension", alg.dimension}, {"basis_coordinates", basis}};
  r.tolerances["singular_value_cutoff"] = alg.cutoff;
  r.verdict = "Computed";
  return r;
}

Outcome cmd_check_homogeneity(const Options& o) {
  const Model model = parse_model(o.model);
  const DeckGroup group = model.kind == ModelKind::Sphere ? DeckGroup::from_orthogonal(sphere_elements(o, model, true))
                                                          : group_manifold_elements(o, model);
  VerifyConfig cfg;
  cfg.seed = o.seed;
  cfg.samples = o.samples;
  cfg.tol = o.tol;
  const auto rep = verify_instance(group, model, cfg);
  Outcome r;
  r.inputs = describe_source(o);
  r.inputs["model"] = o.model;
  r.evidence = to_json(rep);
  r.tolerances = r.evidence["tolerances"];
  r.pass = rep.verdict == Verdict::HomogeneousWitnessFound;
  r.verdict = to_string(rep.verdict);
  return r;
}

Outcome cmd_catalog_list(const Options& o) {
  const auto entries = catalog_load(o.catalog);
  Outcome r;
  r.inputs = {{"catalog", o.catalog}};
  json rows = json::array();
  for (const auto& e : entries) {
    rows.push_back({{"id", e.id},
                    {"name", e.name},
                    {"G", e.group},
                    {"H", e.isotropy},
                    {"isometry_group", e.isometry_group},
                    {"fibration", e.fibration},
                    {"checks", e.checks}});
  }
  r.evidence = {{"count", entries.size()}, {"entries", rows}};
  r.verdict = "Listed";
  return r;
}

Outcome cmd_catalog_verify(const Options& o) {
  const auto entries = catalog_load(o.catalog);
  const auto rep = catalog_verify(catalog_find(entries, o.entry_id), o.seed, o.samples);
  Outcome r;
  r.inputs = {{"catalog", o.catalog}, {"id", o.entry_id}};
  r.evidence = {{"record", rep.record}, {"summary", rep.summary}, {"checks", rep.evidence}};
  r.pass = rep.status != CatalogStatus::Fail;
  r.verdict = to_string(rep.status);
  return r;
}

Outcome cmd_probe_noncompact(const Options& o) {
  Outcome r;
  r.inputs = {{"geometry", o.geometry}, {"radii", o.radii}};
  for (double rad : o.radii)
    if (!(rad > 0.0)) usage("radii must be positive");
  BoundednessEvidence ev;
  if (o.geometry == "euclidean") {
    const Mat a = o.matrix_file.empty() ? Mat(rotation2(o.angle)) : read_matrix_file(o.matrix_file);
    Vec b = Vec::Zero(a.rows());
    if (!o.translation.empty()) {
      if (static_cast<Eigen::Index>(o.translation.size()) != a.rows()) usage("--translation has the wrong length");
      for (std::size_t i = 0; i < o.translation.size(); ++i) b(static_cast<Eigen::Index>(i)) = o.translation[i];
    }
    r.inputs["translation"] = std::vector<double>(b.data(), b.data() + b.size());
    if (o.matrix_file.empty()) r.inputs["angle"] = o.angle;
    else r.inputs["matrix_file"] = o.matrix_file;
    ev = euclidean_bounded(EuclideanMotion(a, b), o.radii);
  } else if (o.geometry == "hyperbolic") {
    if (o.sl2.size() != 4) usage("--sl2 needs four entries a,b,c,d");
    Eigen::Matrix2d m;
    m << o.sl2[0], o.sl2[1], o.sl2[2], o.sl2[3];
    r.inputs["sl2"] = o.sl2;
    ev = hyperbolic_bounded_probe(HyperbolicMotion(m), o.radii);
  } else {
    usage("unknown geometry '" + o.geometry + "' (euclidean, hyperbolic)");
  }
  r.evidence = to_json(ev);
  r.pass = ev.bounded;
  r.verdict = ev.bounded ? "Bounded" : "Unbounded";
  return r;
}

// --- option wiring ------------------------------------------------------------

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--seed", o.seed, "random seed (default 42, or $CWB_SEED)");
  sub->add_option("--samples", o.samples, "number of random samples (>= 10)");
  sub->add_option("--tol", o.tol, "numerical tolerance (> 0)");
  sub->add_option("--output", o.output, "write the JSON report to this file");
}

void add_group_source(CLI::App* sub, Options& o) {
  sub->add_option("--model", o.model, "s<n> for the sphere S^n, or su<n>, so<n>, sp<n>");
  sub->add_option("--group", o.group,
                  "cyclic-N, binary-dihedral-M, binary-tetrahedral, binary-octahedral, binary-icosahedral, "
                  "antipodal (spheres) or center (groups)");
  sub->add_option("--m", o.m, "parameter for cyclic or binary-dihedral");
  sub->add_option("--lens", o.lens, "order k of a lens group");
  sub->add_option("--exponents", o.exponents, "lens exponents, comma separated")->delimiter(',');
  sub->add_option("--matrix-file", o.matrix_file, "file with one orthogonal matrix");
}

std::uint64_t default_seed() {
  const char* env = std::getenv("CWB_SEED");
  if (!env || !*env) return kDefaultSeed;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used);
    if (used == std::string(env).size()) return v;
  } catch (const std::exception&) {
  }
  usage(std::string("CWB_SEED is not an unsigned integer: ") + env);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  o.catalog = default_catalog_path();
  try {
    o.seed = default_seed();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App app{"Checks for Clifford translations, homogeneous quotients and isometry groups", "cwbench"};
  app.require_subcommand(1);
  std::string command;

  auto* construct = app.add_subcommand("construct", "build a finite subgroup of the unit quaternions");
  add_common(construct, o);
  construct->add_option("--group", o.group, "group tag")->required();
  construct->add_option("--m", o.m, "parameter for cyclic or binary-dihedral");

  auto* clifford = app.add_subcommand("check-clifford", "constant-displacement test on a sphere");
  add_common(clifford, o);
  add_group_source(clifford, o);

  auto* free = app.add_subcommand("check-free", "fixed-point freeness of a finite group");
  add_common(free, o);
  add_group_source(free, o);

  auto* killing = app.add_subcommand("check-killing", "length profile of a Killing field on G/H");
  add_common(killing, o);
  killing->add_option("--space", o.space, "su2, su3, s2, s3-hopf, s5-hopf or so5-so3");
  killing->add_option("--direction", o.direction, "random, hopf or isotropy");

  auto* berger = app.add_subcommand("check-berger", "right isometry algebra of a Berger sphere");
  add_common(berger, o);
  berger->add_option("--a", o.a, "metric coefficient a (0 < a <= b <= 1)");
  berger->add_option("--b", o.b, "metric coefficient b");

  auto* homog = app.add_subcommand("check-homogeneity", "centralizer witness for a homogeneous quotient");
  add_common(homog, o);
  add_group_source(homog, o);

  auto* catalog = app.add_subcommand("catalog", "catalog of positively curved homogeneous spaces");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "list all entries");
  add_common(list, o);
  list->add_option("--catalog", o.catalog, "catalog file");
  auto* verify = catalog->add_subcommand("verify", "run the checks attached to an entry");
  add_common(verify, o);
  verify->add_option("--catalog", o.catalog, "catalog file");
  verify->add_option("id", o.entry_id, "entry id")->required();

  auto* probe = app.add_subcommand("probe-noncompact", "boundedness of a Euclidean or hyperbolic motion");
  add_common(probe, o);
  probe->add_option("--geometry", o.geometry, "euclidean or hyperbolic");
  probe->add_option("--angle", o.angle, "rotation angle of a planar Euclidean motion");
  probe->add_option("--matrix-file", o.matrix_file, "rotation part of a Euclidean motion");
  probe->add_option("--translation", o.translation, "translation part, comma separated")->delimiter(',');
  probe->add_option("--sl2", o.sl2, "SL(2,R) entries a,b,c,d")->delimiter(',');
  probe->add_option("--radii", o.radii, "radius schedule, comma separated")->delimiter(',');

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome result;
  try {
    if (o.samples < 10) usage("--samples must be at least 10");
    if (!(o.tol > 0.0)) usage("--tol must be positive");
    if (construct->parsed()) command = "construct", result = cmd_construct(o);
    else if (clifford->parsed()) command = "check-clifford", result = cmd_check_clifford(o);
    else if (free->parsed()) command = "check-free", result = cmd_check_free(o);
    else if (killing->parsed()) command = "check-killing", result = cmd_check_killing(o);
    else if (berger->parsed()) command = "check-berger", result = cmd_check_berger(o);
    else if (homog->parsed()) command = "check-homogeneity", result = cmd_check_homogeneity(o);
    else if (list->parsed()) command = "catalog list", result = cmd_catalog_list(o);
    else if (verify->parsed()) command = "catalog verify", result = cmd_catalog_verify(o);
    else command = "probe-noncompact", result = cmd_probe_noncompact(o);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  json tolerances = result.tolerances;
  if (!tolerances.contains("tol")) tolerances["tol"] = o.tol;
  const json report = {{"command", command},   {"inputs", result.inputs},   {"seed", o.seed},
                       {"tolerances", tolerances}, {"evidence", result.evidence}, {"verdict", result.verdict},
                       {"wall_time_ms", elapsed}};
  const std::string text = report.dump(2);
  out << text << "\n";
  if (!o.output.empty()) {
    std::ofstream file(o.output);
    if (!(file << text << "\n")) {
      err << "error: cannot write " << o.output << "\n";
      return kExitUsage;
    }
  }
  return result.pass ? kExitPass : kExitFail;
}

}  // namespace cwb
