#pragma once

#include <string>
#include <vector>

#include "orthoposet/orbit.hpp"

namespace orthoposet {

/// One row of the versioned orbit catalog (data/orbit_catalog.json,
/// embedded at build time). Non-admissible rows carry no expected values
/// beyond the verdict.
struct CatalogRow {
  std::string diagram;
  int size = 0;
  int variant = 0;
  int k = 0;
  std::vector<std::string> seed;
  bool admissible = false;
  long long orbit_size = -1;
  std::string c_type;
  std::string y_type;
  long long normalizer_order = -1;
  std::vector<std::string> b0;
  std::string note;

  std::string key() const;
};

const std::vector<CatalogRow>& orbit_catalog();

/// Canonical type name of the root subsystem orthogonal to every member of
/// B: its simple system is extracted (positive roots of the subsystem that
/// are not sums of two of them) and classified.
std::string orthogonal_subsystem_type(const RootSystem& rs, const OrthoSet& b);

}  // namespace orthoposet
