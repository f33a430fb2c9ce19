#include "cwb/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "cwb/berger.hpp"
#include "cwb/constant_curvature.hpp"
#include "cwb/error.hpp"
#include "cwb/finite_groups.hpp"
#include "cwb/killing.hpp"
#include "cwb/reductive.hpp"

#ifndef CWB_DATA_DIR
#define CWB_DATA_DIR "data"
#endif

namespace cwb {

namespace {

using nlohmann::json;

const std::set<std::string> kKnownChecks = {"informational", "clifford", "hopf", "killing-none", "berger"};
const char* const kOutsideModels[] = {"F4", "G2", "Spin", "E6", "E7", "E8"};
const std::vector<std::string> kHeader = {"id", "name", "G", "H", "isometry_group", "fibration", "checks"};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \r") - b + 1);
}

[[noreturn]] void parse_error(const std::string& path, int line, const std::string& msg) {
  throw Error(ErrorKind::ParseError, path + ":" + std::to_string(line) + ": " + msg);
}

json sphere_battery() {
  const double tol = 1e-7;
  json ev = json::array();
  bool ok = true;
  const auto record = [&](const std::string& name, const std::vector<OrthogonalMap>& group, bool expect_clifford) {
    const bool free = is_free_on_sphere(group, tol).free;
    bool all = true;
    double worst_spread = 0.0;
    for (const auto& g : group) {
      const auto c = is_clifford_sphere(g, tol);
      all = all && c.clifford;
      worst_spread = std::max(worst_spread, c.spread);
    }
    const bool pass = free && all == expect_clifford;
    ok = ok && pass;
    ev.push_back({{"group", name},
                  {"sphere_dim", group.front().ambient_dim() - 1},
                  {"order", group.size()},
                  {"free", free},
                  {"all_clifford", all},
                  {"expected_clifford", expect_clifford},
                  {"max_angle_spread", worst_spread},
                  {"pass", pass}});
  };
  std::vector<OrthogonalMap> istar;
  for (const auto& m : left_translation_matrices(named_binary_group(GroupType::binary_icosahedral())))
    istar.emplace_back(m);
  record("lens(5;1,1)", lens_group(5, {1, 1}), true);
  record("binary icosahedral (left multiplication)", istar, true);
  record("lens(5;1,2)", lens_group(5, {1, 2}), false);
  record("lens(7;1,1,1)", lens_group(7, {1, 1, 1}), true);
  record("lens(7;1,2,3)", lens_group(7, {1, 2, 3}), false);
  return {{"pass", ok}, {"instances", ev}};
}

json hopf_battery(std::uint64_t seed, std::size_t samples) {
  Rng rng(seed);
  json ev = json::array();
  bool ok = true;
  for (int m = 1; m <= 2; ++m) {
    const auto g = CompactGroupSpec::su(m + 1);
    const auto space = HomogeneousSpaceSpec::normal(g, m >= 2 ? su_block(m + 1, m) : std::vector<AlgebraElement>{});
    CMat eta = CMat::Zero(m + 1, m + 1);
    for (int k = 0; k < m; ++k) eta(k, k) = cplx(0.0, 1.0);
    eta(m, m) = cplx(0.0, -static_cast<double>(m));
    eta /= algebra_norm(eta);
    const auto p = killing_length_profile(space, KillingGenerator::right_field({eta}), samples, rng);
    const bool pass = p.relative_gap() <= 1e-8;
    ok = ok && pass;
    ev.push_back({{"space", "SU(" + std::to_string(m + 1) + ")/SU(" + std::to_string(m) + ")"},
                  {"m", m},
                  {"min", p.min},
                  {"max", p.max},
                  {"mean", p.mean},
                  {"relative_gap", p.relative_gap()},
                  {"pass", pass}});
  }
  return {{"pass", ok}, {"threshold", 1e-8}, {"instances", ev}};
}

json killing_none_battery(std::uint64_t seed, std::size_t samples) {
  Rng rng(seed);
  const auto space = HomogeneousSpaceSpec::normal(CompactGroupSpec::so(5), principal_so3_in_so5());
  const int directions = 50;
  double lo = INFINITY;
  double hi = 0.0;
  for (int i = 0; i < directions; ++i) {
    const auto xi = random_algebra_element(space.group(), rng);
    const double gap = killing_length_profile(space, xi, samples, rng).relative_gap();
    lo = std::min(lo, gap);
    hi = std::max(hi, gap);
  }
  return {{"pass", lo > 1e-3},
          {"space", "SO(5)/SO(3), principal embedding, normal metric"},
          {"directions", directions},
          {"samples_per_direction", samples},
          {"min_relative_gap", lo},
          {"max_relative_gap", hi},
          {"threshold", 1e-3},
          {"assumption", "de Rham irreducibility of the space is assumed, not verified"}};
}

json berger_battery() {
  struct Case {
    double a, b;
    int expected;
  };
  const std::vector<Case> cases = {{1.0, 1.0, 3}, {0.5, 1.0, 1}, {0.25, 0.5, 0}};
  json ev = json::array();
  bool ok = true;
  for (const auto& c : cases) {
    const int dim = berger_right_isometry_algebra(c.a, c.b).dimension;
    ok = ok && dim == c.expected;
    ev.push_back({{"a", c.a}, {"b", c.b}, {"dimension", dim}, {"expected", c.expected}});
  }
  return {{"pass", ok}, {"cases", ev}};
}

}  // namespace

std::string default_catalog_path() { return std::string(CWB_DATA_DIR) + "/catalog.tsv"; }

std::vector<CatalogEntry> catalog_load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open catalog file");
  std::vector<CatalogEntry> out;
  std::set<int> ids;
  bool header_seen = false;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (trim(raw).empty() || raw[0] == '#') continue;
    const auto fields = split(raw, '\t');
    if (!header_seen) {
      std::vector<std::string> trimmed;
      for (const auto& f : fields) trimmed.push_back(trim(f));
      if (trimmed != kHeader) parse_error(path, line, "expected header 'id name G H isometry_group fibration checks'");
      header_seen = true;
      continue;
    }
    if (fields.size() != kHeader.size()) {
      parse_error(path, line, "expected 7 tab-separated fields, found " + std::to_string(fields.size()));
    }
    CatalogEntry e;
    e.line = line;
    try {
      std::size_t used = 0;
      e.id = std::stoi(fields[0], &used);
      if (used != trim(fields[0]).size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      parse_error(path, line, "invalid id '" + fields[0] + "'");
    }
    if (e.id < 1) parse_error(path, line, "id must be positive");
    if (!ids.insert(e.id).second) parse_error(path, line, "duplicate id " + std::to_string(e.id));
    e.name = trim(fields[1]);
    e.group = trim(fields[2]);
    e.isotropy = trim(fields[3]);
    e.isometry_group = trim(fields[4]);
    e.fibration = trim(fields[5]);
    for (const auto& c : split(fields[6], ',')) {
      const auto t = trim(c);
      if (!kKnownChecks.count(t)) parse_error(path, line, "unknown check '" + t + "'");
      e.checks.push_back(t);
    }
    if (e.name.empty() || e.group.empty() || e.isotropy.empty() || e.checks.empty()) {
      parse_error(path, line, "empty field");
    }
    out.push_back(std::move(e));
  }
  if (!header_seen) throw Error(ErrorKind::ParseError, path + ": missing header");
  return out;
}

const CatalogEntry& catalog_find(const std::vector<CatalogEntry>& entries, int id) {
  const auto it = std::find_if(entries.begin(), entries.end(), [id](const CatalogEntry& e) { return e.id == id; });
  if (it == entries.end()) throw Error(ErrorKind::InvalidParameter, "no catalog entry with id " + std::to_string(id));
  return *it;
}

std::string to_string(CatalogStatus s) {
  switch (s) {
    case CatalogStatus::Pass: return "pass";
    case CatalogStatus::Fail: return "fail";
    case CatalogStatus::Informational: return "informational";
  }
  return "?";
}

CatalogReport catalog_verify(const CatalogEntry& entry, std::uint64_t seed, std::size_t samples) {
  CatalogReport r;
  r.id = entry.id;
  r.name = entry.name;
  r.record = {{"id", entry.id},
              {"name", entry.name},
              {"G", entry.group},
              {"H", entry.isotropy},
              {"isometry_group", entry.isometry_group},
              {"fibration", entry.fibration}};
  r.evidence = json::object();
  bool any = false;
  bool ok = true;
  for (const auto& check : entry.checks) {
    json ev;
    if (check == "clifford") {
      ev = sphere_battery();
    } else if (check == "hopf") {
      ev = hopf_battery(seed, samples);
    } else if (check == "killing-none") {
      ev = killing_none_battery(seed, samples);
    } else if (check == "berger") {
      ev = berger_battery();
    } else {
      continue;
    }
    any = true;
    ok = ok && ev.at("pass").get<bool>();
    r.evidence[check] = ev;
  }
  if (!any) {
    r.status = CatalogStatus::Informational;
    const bool exceptional = std::any_of(std::begin(kOutsideModels), std::end(kOutsideModels), [&](const char* t) {
      return (entry.group + " " + entry.isotropy).find(t) != std::string::npos;
    });
    r.summary = entry.name + " = " + entry.group + "/" + entry.isotropy +
                (exceptional ? ": involves a group outside the matrix models (exceptional or spin)"
                             : ": no executable check attached");
  } else {
    r.status = ok ? CatalogStatus::Pass : CatalogStatus::Fail;
    r.summary = std::string(ok ? "all" : "not all") + " checks for " + entry.name + " passed";
  }
  return r;
}

}  // namespace cwb
