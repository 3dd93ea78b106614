#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "orthoposet/poset.hpp"
#include "orthoposet/root_parse.hpp"

using namespace orthoposet;

namespace {

RootSystem build(const std::string& name) {
  return RootSystem::build(DiagramType::parse(name));
}

OrthoSet roots(const RootSystem& rs, const std::string& list) {
  return parse_root_list(rs, list);
}

// Applies a word to a set, rightmost letter first (the set analogue of
// B = r_{i_1} ... r_{i_s} B0).
OrthoSet apply_word(const RootSystem& rs, const std::vector<int>& word, OrthoSet b) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) b = act_node(rs, *it, b);
  return b;
}

}  // namespace

TEST_CASE("comparison rule") {
  RootSystem rs = build("A3");
  OrthoSet b{rs.simple_root(1)};
  CHECK(compare_sets(rs, b, b) == Ordering::Equal);
  OrthoSet c = roots(rs, "a1+a2");
  CHECK(compare_sets(rs, b, c) == Ordering::Less);
  CHECK(compare_sets(rs, c, b) == Ordering::Greater);
  // sets identical after the action when alpha_i is in B
  CHECK(compare_sets(rs, act_node(rs, 1, b), b) == Ordering::Equal);
}

TEST_CASE("edge classification") {
  RootSystem a3 = build("A3");
  OrthoSet b{a3.simple_root(1)};
  CHECK(classify_edge(a3, 1, b) == EdgeClass::FixesInB);
  CHECK(classify_edge(a3, 3, b) == EdgeClass::FixesPerp);
  CHECK(classify_edge(a3, 2, b) == EdgeClass::Raises);
  CHECK(classify_edge(a3, 2, roots(a3, "a1+a2")) == EdgeClass::Lowers);

  RootSystem d5 = build("D5");
  OrthoSet db = roots(d5, "e3+e4,e1+e2");
  CHECK(classify_edge(d5, 2, db) == EdgeClass::Raises);
  CHECK(classify_edge(d5, 1, db) == EdgeClass::FixesPerp);
  CHECK(classify_edge(d5, 3, db) == EdgeClass::FixesPerp);
}

TEST_CASE("poset construction on the A3 single-root orbit") {
  RootSystem rs = build("A3");
  MonoidalPoset p = build_poset(rs, enumerate_orbit(rs, {rs.simple_root(1)}));
  CHECK(maximal_element(p) == roots(rs, "a1+a2+a3"));  // the highest root
  CHECK(p.level[p.b0] == 0);
  int max_level = *std::max_element(p.level.begin(), p.level.end());
  CHECK(max_level == 2);
  // independent scan: exactly one member with no raising edge
  int no_raise = 0;
  for (int m = 0; m < p.size(); ++m) {
    bool raises = false;
    for (int i = 1; i <= rs.rank(); ++i)
      if (classify_edge(rs, i, p.member(m)) == EdgeClass::Raises) raises = true;
    if (!raises) ++no_raise;
  }
  CHECK(no_raise == 1);
}

TEST_CASE("non-admissible orbits are rejected") {
  RootSystem d5 = build("D5");
  OrbitData bad = enumerate_orbit(d5, roots(d5, "a1+a2+a3,a2+a3+a4,a1+a2+a3+a4+a5"));
  CHECK_THROWS_WITH_AS(build_poset(d5, std::move(bad)), "orbit not admissible",
                       std::runtime_error);
}

TEST_CASE("maximal members match the closed forms") {
  RootSystem a5 = build("A5");
  MonoidalPoset pa = build_poset(a5, enumerate_orbit(a5, seed_from_table(a5, 2, 0)));
  CHECK(maximal_element(pa) == roots(a5, "e1-e5,e2-e6"));

  RootSystem d5 = build("D5");
  MonoidalPoset pd = build_poset(d5, enumerate_orbit(d5, seed_from_table(d5, 2, 0)));
  CHECK(maximal_element(pd) == roots(d5, "e1+e4,e2+e3"));

  // rank = 2t: the two mirror classes have mirrored maxima
  RootSystem d6 = build("D6");
  MonoidalPoset p0 = build_poset(d6, enumerate_orbit(d6, seed_from_table(d6, 3, 0)));
  CHECK(maximal_element(p0) == roots(d6, "e1-e6,e2+e5,e3+e4"));
  MonoidalPoset p1 = build_poset(d6, enumerate_orbit(d6, seed_from_table(d6, 3, 1)));
  CHECK(maximal_element(p1) == roots(d6, "e1+e6,e2+e5,e3+e4"));
}

TEST_CASE("remark example: two raising chains meet in B0") {
  RootSystem d5 = build("D5");
  MonoidalPoset p = build_poset(d5, enumerate_orbit(d5, seed_from_table(d5, 2, 0)));
  int m = p.orbit.index_of.at(roots(d5, "e3+e4,e1+e2"));
  int b0 = p.orbit.index_of.at(roots(d5, "e1+e4,e2+e3"));
  CHECK(p.b0 == b0);
  CHECK(p.cls(m, 2) == EdgeClass::Raises);
  int up = p.orbit.edge(m, 2);
  CHECK(p.orbit.edge(up, 1) == b0);
  CHECK(p.orbit.edge(up, 3) == b0);
  CHECK(p.level[m] == 2);
}

TEST_CASE("order axioms hold on admissible orbits") {
  for (auto [name, size, variant, k] :
       std::vector<std::tuple<std::string, int, int, int>>{
           {"A4", 2, 0, 0}, {"D4", 1, 0, 0}, {"D5", 2, 0, 0}, {"D5", 2, 0, 1},
           {"D6", 3, 1, 0}, {"E6", 2, 0, 0}}) {
    RootSystem rs = build(name);
    MonoidalPoset p = build_poset(rs, enumerate_orbit(rs, seed_from_table(rs, size, variant, k)));
    AxiomReport rep = verify_order_axioms(p);
    INFO(name, " size ", size, " variant ", variant,
         " first failure: ", rep.failures.empty() ? "-" : rep.failures[0]);
    CHECK(rep.pass);
    CHECK(rep.checks > 0);
  }
}

TEST_CASE("single-member orbit is a vacuous poset") {
  RootSystem a1 = build("A1");
  MonoidalPoset p = build_poset(a1, enumerate_orbit(a1, {a1.simple_root(1)}));
  CHECK(p.size() == 1);
  CHECK(p.b0 == 0);
  CHECK(verify_order_axioms(p).pass);
  CHECK(p.c_nodes.empty());
}

TEST_CASE("levels equal the shortest word length and minimal words descend") {
  for (auto [name, seed_size] : std::vector<std::pair<std::string, int>>{{"A3", 1}, {"D4", 2}}) {
    RootSystem rs = build(name);
    MonoidalPoset p = build_poset(rs, enumerate_orbit(rs, seed_from_table(rs, seed_size, 0)));
    const int max_len = 5;
    // enumerate every word of length <= max_len on the full node alphabet
    std::map<int, int> best;  // member -> shortest word length reaching it
    std::vector<std::vector<int>> layer{{}};
    best[p.b0] = 0;
    for (int len = 1; len <= max_len; ++len) {
      std::vector<std::vector<int>> next;
      for (const auto& w : layer)
        for (int i = 1; i <= rs.rank(); ++i) {
          std::vector<int> w2 = w;
          w2.insert(w2.begin(), i);
          int m = p.orbit.index_of.at(apply_word(rs, w2, p.member(p.b0)));
          if (!best.count(m)) best[m] = len;
          // a word of minimal length must descend at every step
          if (best[m] == len && p.level[m] == len) {
            OrthoSet cur = p.member(p.b0);
            for (auto it = w2.rbegin(); it != w2.rend(); ++it) {
              OrthoSet down = act_node(rs, *it, cur);
              CHECK(compare_sets(rs, down, cur) == Ordering::Less);
              cur = down;
            }
          }
          next.push_back(std::move(w2));
        }
      layer = std::move(next);
    }
    for (auto [m, len] : best) CHECK(len == p.level[m]);
    // every member within reach was reached
    for (int m = 0; m < p.size(); ++m)
      if (p.level[m] <= max_len) CHECK(best.count(m) == 1);
  }
}

TEST_CASE("exports") {
  RootSystem rs = build("A3");
  MonoidalPoset p = build_poset(rs, enumerate_orbit(rs, {rs.simple_root(1)}));
  std::string dot = poset_to_dot(p);
  CHECK(dot.find("digraph poset") != std::string::npos);
  CHECK(dot.find("L0") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
  std::string json = poset_to_json(p);
  CHECK(json.find("\"b0\":") != std::string::npos);
  CHECK(json.find("\"edge_class\":") != std::string::npos);
}
