#include "doctest.h"
#include "json.hpp"
#include "orthoposet/root_parse.hpp"
#include "orthoposet/tables.hpp"

using namespace orthoposet;

namespace {

RootSystem build(const std::string& name) {
  return RootSystem::build(DiagramType::parse(name));
}

}  // namespace

TEST_CASE("root literals") {
  RootSystem e7 = build("E7");
  CHECK(e7.root(parse_root(e7, "2a1+2a2+3a3+4a4+3a5+2a6+a7")) ==
        RootVec{2, 2, 3, 4, 3, 2, 1});
  CHECK(e7.root(parse_root(e7, "a2 + a3 + 2*a4 + a5")) == RootVec{0, 1, 1, 2, 1, 0, 0});
  CHECK_THROWS_AS(parse_root(e7, "a1+2*a4"), std::invalid_argument);  // not a root

  RootSystem d5 = build("D5");
  CHECK(d5.root(parse_root(d5, "e1+e2")) == RootVec{1, 2, 2, 1, 1});
  CHECK(d5.root(parse_root(d5, "e3-e4")) == RootVec{0, 0, 1, 0, 0});
  CHECK(parse_root(d5, "a3") == parse_root(d5, "e3 - e4"));

  CHECK_THROWS_AS(parse_root(d5, "e1"), std::invalid_argument);        // not a root
  CHECK_THROWS_AS(parse_root(d5, "e1+a2"), std::invalid_argument);     // mixed symbols
  CHECK_THROWS_AS(parse_root(d5, "e2-e1"), std::invalid_argument);     // negative root
  CHECK_THROWS_AS(parse_root(d5, "a9"), std::invalid_argument);        // out of range
  CHECK_THROWS_AS(parse_root(d5, ""), std::invalid_argument);
  CHECK_THROWS_AS(parse_root(build("E6"), "e1+e2"), std::invalid_argument);

  OrthoSet set = parse_root_list(d5, "e3+e4, e1+e2");
  CHECK(set.size() == 2);
  CHECK_THROWS_WITH_AS(parse_root_list(d5, "a1,a2"), doctest::Contains("not orthogonal"),
                       std::invalid_argument);
}

TEST_CASE("orbit JSON schema") {
  RootSystem a3 = build("A3");
  OrbitData orbit = enumerate_orbit(a3, {a3.simple_root(1)});
  nlohmann::json j = nlohmann::json::parse(orbit_to_json(orbit, true));
  CHECK(j["diagram"] == "A3");
  CHECK(j["size"] == 6);
  CHECK(j["admissible"] == true);
  CHECK(j["members"].size() == 6);
  CHECK(j["seed"].size() == 1);
  CHECK(j["edges"].size() == 6 * 3);
  CHECK(j["edges"][0].contains("node"));
  CHECK(j["edges"][0].contains("from"));
  CHECK(j["edges"][0].contains("to"));
}

TEST_CASE("poset JSON schema") {
  RootSystem a3 = build("A3");
  MonoidalPoset p = build_poset(a3, enumerate_orbit(a3, {a3.simple_root(1)}));
  nlohmann::json j = nlohmann::json::parse(poset_to_json(p));
  CHECK(j["b0"] == p.b0);
  CHECK(j["levels"].size() == 6);
  CHECK(j["edge_class"].size() == 6);
  CHECK(j["edge_class"][0].size() == 3);
}

TEST_CASE("catalog is well formed and matches the seed constructors") {
  const auto& rows = orbit_catalog();
  CHECK(rows.size() > 80);
  int admissible = 0;
  for (const CatalogRow& row : rows) {
    CAPTURE(row.key());
    RootSystem rs = build(row.diagram);
    OrthoSet seed = parse_root_list(rs, [&] {
      std::string joined;
      for (const auto& r : row.seed) {
        if (!joined.empty()) joined += ',';
        joined += r;
      }
      return joined;
    }());
    CHECK(static_cast<int>(seed.size()) == row.size);
    CHECK(seed == seed_from_table(rs, row.size, row.variant, row.k));
    if (row.admissible) {
      ++admissible;
      CHECK(row.orbit_size > 0);
      CHECK(row.normalizer_order > 0);
      CHECK(rs.dtype().weyl_order() == row.orbit_size * row.normalizer_order);
      CHECK_FALSE(row.c_type.empty());
      CHECK_FALSE(row.y_type.empty());
    }
    for (const auto& b0_root : row.b0) (void)parse_root(rs, b0_root);
  }
  CHECK(admissible == 63);
}

TEST_CASE("orthogonal subsystem classification") {
  RootSystem e8 = build("E8");
  OrthoSet b{e8.simple_root(2)};
  CHECK(orthogonal_subsystem_type(e8, b) == "E7");
  RootSystem d6 = build("D6");
  CHECK(orthogonal_subsystem_type(d6, seed_from_table(d6, 2, 0, 1)) == "D4");
  RootSystem a5 = build("A5");
  CHECK(orthogonal_subsystem_type(a5, seed_from_table(a5, 2, 0)) == "A1");
}

TEST_CASE("diagram classification handles the degenerate names") {
  // three isolated nodes
  CHECK(classify_simply_laced(3, {{}, {}, {}}) == "A1+A1+A1");
  // path of four
  CHECK(classify_simply_laced(4, {{1}, {0, 2}, {1, 3}, {2}}) == "A4");
  // star with three branches of length one: D4
  CHECK(classify_simply_laced(4, {{1, 2, 3}, {0}, {0}, {0}}) == "D4");
  CHECK(classify_simply_laced(0, {}) == "empty");
  // E6 shape: chain of 5 with a branch at the middle
  CHECK(classify_simply_laced(
            6, {{1}, {0, 2}, {1, 3, 5}, {2, 4}, {3}, {2}}) == "E6");
}
