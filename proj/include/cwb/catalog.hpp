#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace cwb {

/// One row of the catalog of homogeneous spaces with positive curvature and
/// their isometry groups.
struct CatalogEntry {
  int id = 0;
  std::string name;
  std::string group;          // G
  std::string isotropy;       // H
  std::string isometry_group;
  std::string fibration;      // "-" when none is listed
  std::vector<std::string> checks;
  int line = 0;               // source line in the catalog file
};

/// Catalog file bundled with the library.
std::string default_catalog_path();

/// Tab-separated file: '#' comments, a header line
/// "id name G H isometry_group fibration checks", one record per line; checks
/// is a comma-separated subset of informational, clifford, hopf, killing-none,
/// berger. Throws ParseError (with the line number) on malformed input,
/// unknown checks or duplicate ids.
std::vector<CatalogEntry> catalog_load(const std::string& path);

const CatalogEntry& catalog_find(const std::vector<CatalogEntry>& entries, int id);

enum class CatalogStatus { Pass, Fail, Informational };
std::string to_string(CatalogStatus s);

struct CatalogReport {
  int id = 0;
  std::string name;
  CatalogStatus status = CatalogStatus::Informational;
  std::string summary;
  /// Description of the row (always present).
  nlohmann::json record;
  /// Numerical evidence of the executed checks (empty for informational rows).
  nlohmann::json evidence;
};

/// Runs the checks attached to an entry: clifford (Clifford and freeness
/// battery on S^3 and S^5), hopf (constant length of the Hopf field on
/// SU(m+1)/SU(m), m = 1, 2), killing-none (50 random directions on
/// SO(5)/SO(3) all with relative length gap > 1e-3), berger (right isometry
/// algebra dimensions 3, 1, 0). Other rows are informational.
CatalogReport catalog_verify(const CatalogEntry& entry, std::uint64_t seed, std::size_t samples);

}  // namespace cwb
