#include "orthoposet/tables.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "orbit_catalog_data.hpp"

namespace orthoposet {

std::string CatalogRow::key() const {
  std::ostringstream os;
  os << diagram << " size " << size << " variant " << variant;
  if (k) os << " k " << k;
  return os.str();
}

const std::vector<CatalogRow>& orbit_catalog() {
  static const std::vector<CatalogRow> rows = [] {
    nlohmann::json doc = nlohmann::json::parse(detail::kOrbitCatalogJson);
    if (doc.at("version").get<int>() != 1)
      throw std::runtime_error("unsupported orbit catalog version");
    std::vector<CatalogRow> out;
    for (const auto& j : doc.at("rows")) {
      CatalogRow r;
      r.diagram = j.at("diagram").get<std::string>();
      r.size = j.at("size").get<int>();
      r.variant = j.at("variant").get<int>();
      r.k = j.at("k").get<int>();
      r.seed = j.at("seed").get<std::vector<std::string>>();
      r.admissible = j.at("admissible").get<bool>();
      if (r.admissible) {
        r.orbit_size = j.at("orbit_size").get<long long>();
        r.c_type = j.at("c_type").get<std::string>();
        r.y_type = j.at("y_type").get<std::string>();
        r.normalizer_order = j.at("normalizer_order").get<long long>();
      }
      if (j.contains("b0")) r.b0 = j.at("b0").get<std::vector<std::string>>();
      if (j.contains("note")) r.note = j.at("note").get<std::string>();
      out.push_back(std::move(r));
    }
    return out;
  }();
  return rows;
}

std::string orthogonal_subsystem_type(const RootSystem& rs, const OrthoSet& b) {
  std::vector<int> perp;
  for (int r = 0; r < rs.num_positive(); ++r) {
    bool ok = true;
    for (int beta : b)
      if (rs.inner(r, beta) != 0) { ok = false; break; }
    if (ok) perp.push_back(r);
  }
  // Simple roots of the subsystem: positive members that are not the sum of
  // two positive members.
  std::vector<int> simples;
  for (int r : perp) {
    bool decomposable = false;
    for (int a : perp) {
      if (a == r) continue;
      RootVec diff = rs.root(r);
      const RootVec& va = rs.root(a);
      for (int c = 0; c < rs.rank(); ++c) diff[c] -= va[c];
      SignedRoot s = rs.lookup(diff);
      if (s > 0) {
        bool in_perp = false;
        for (int x : perp)
          if (x == root_index(s)) { in_perp = true; break; }
        if (in_perp) { decomposable = true; break; }
      }
    }
    if (!decomposable) simples.push_back(r);
  }
  std::vector<std::vector<int>> adj(simples.size());
  for (size_t a = 0; a < simples.size(); ++a)
    for (size_t c = 0; c < simples.size(); ++c) {
      if (a == c) continue;
      int ip = rs.inner(simples[a], simples[c]);
      if (ip == -1) adj[a].push_back(static_cast<int>(c));
      else if (ip != 0)
        throw std::logic_error("orthogonal subsystem simple roots with inner product " +
                               std::to_string(ip));
    }
  return classify_simply_laced(static_cast<int>(simples.size()), adj);
}

}  // namespace orthoposet
