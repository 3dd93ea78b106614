#include <functional>
#include <set>

#include "doctest.h"
#include "orthoposet/h_elements.hpp"
#include "orthoposet/root_parse.hpp"

using namespace orthoposet;

namespace {

RootSystem build(const std::string& name) {
  return RootSystem::build(DiagramType::parse(name));
}

MonoidalPoset poset_of(const RootSystem& rs, int size, int variant, int k = 0) {
  return build_poset(rs, enumerate_orbit(rs, seed_from_table(rs, size, variant, k)));
}

// Literal recursive enumeration of all chains for one pair, collecting the
// conjugated nodes; the recursion explores every raising node.
void all_chain_values(const MonoidalPoset& p, int member, int node,
                      std::set<int>& values, int& chains, int cap) {
  if (chains >= cap) return;
  if (member == p.b0) {
    bool in_c = false;
    for (int c : p.c_nodes) in_c |= c == node;
    REQUIRE(in_c);
    values.insert(node);
    ++chains;
    return;
  }
  for (int j = 1; j <= p.rs->rank(); ++j) {
    if (p.cls(member, j) != EdgeClass::Raises) continue;
    int up = p.orbit.edge(member, j);
    if (!p.rs->dtype().adjacent(node, j))
      all_chain_values(p, up, node, values, chains, cap);
    else
      all_chain_values(p, p.orbit.edge(up, node), j, values, chains, cap);
  }
}

}  // namespace

TEST_CASE("chains and values of the D5 two-root example") {
  RootSystem d5 = build("D5");
  MonoidalPoset p = poset_of(d5, 2, 0);
  int m = p.orbit.index_of.at(parse_root_list(d5, "e3+e4,e1+e2"));

  ChainWord c1 = v_chain(p, m, 1);
  CHECK(c1.word == std::vector<int>{2, 1});
  CHECK(h_value(p, m, 1) == 2);

  ChainWord c3 = v_chain(p, m, 3);
  CHECK(c3.word == std::vector<int>{2, 3});
  CHECK(h_value(p, m, 3) == 2);

  // the non-admitted word s2 s3 for i = 1 conjugates to a non-generator
  SignedRoot s = conjugate_root_along(d5, {2, 3}, 1);
  CHECK(s > 0);
  CHECK(d5.root(root_index(s)) == RootVec{1, 1, 1, 0, 0});

  // maximal member: empty chain, value is the node itself
  for (int c : p.c_nodes) {
    CHECK(v_chain(p, p.b0, c).word.empty());
    CHECK(h_value(p, p.b0, c) == c);
  }

  // not orthogonal -> error
  CHECK_THROWS_AS(v_chain(p, m, 4), std::invalid_argument);
}

TEST_CASE("chain words have the level as length") {
  RootSystem d6 = build("D6");
  MonoidalPoset p = poset_of(d6, 2, 0);
  HTable ht = build_h_table(p);
  for (int m = 0; m < p.size(); ++m)
    for (int i = 1; i <= d6.rank(); ++i) {
      if (!ht.defined(m, i)) continue;
      CHECK(static_cast<int>(v_chain(p, m, i).word.size()) == p.level[m]);
    }
}

TEST_CASE("the table agrees with direct chain evaluation") {
  for (auto [name, size, variant, k] :
       std::vector<std::tuple<std::string, int, int, int>>{
           {"A5", 2, 0, 0}, {"D4", 1, 0, 0}, {"D5", 2, 0, 1}, {"E6", 2, 0, 0}}) {
    RootSystem rs = build(name);
    MonoidalPoset p = poset_of(rs, size, variant, k);
    HTable ht = build_h_table(p);
    for (int m = 0; m < p.size(); ++m)
      for (int i = 1; i <= rs.rank(); ++i)
        if (ht.defined(m, i)) CHECK(ht.entry(m, i) == h_value(p, m, i));
  }
}

TEST_CASE("values always land in C on admissible orbits") {
  RootSystem d6 = build("D6");
  MonoidalPoset p = poset_of(d6, 3, 0);
  HTable ht = build_h_table(p);
  std::set<int> cset(p.c_nodes.begin(), p.c_nodes.end());
  for (int m = 0; m < p.size(); ++m)
    for (int i = 1; i <= d6.rank(); ++i)
      if (ht.defined(m, i)) CHECK(cset.count(ht.entry(m, i)) == 1);
}

TEST_CASE("chain-choice independence") {
  for (auto [name, size, variant, k] :
       std::vector<std::tuple<std::string, int, int, int>>{
           {"A5", 2, 0, 0}, {"D5", 2, 0, 0}, {"D5", 2, 0, 1}, {"D6", 3, 1, 0},
           {"E6", 2, 0, 0}}) {
    RootSystem rs = build(name);
    MonoidalPoset p = poset_of(rs, size, variant, k);
    HTable ht = build_h_table(p);
    HReport rep = verify_h_well_defined(p, ht);
    INFO(name, " first failure: ", rep.failures.empty() ? "-" : rep.failures[0]);
    CHECK(rep.pass);
  }
}

TEST_CASE("literal enumeration of every chain on small orbits") {
  RootSystem d5 = build("D5");
  MonoidalPoset p = poset_of(d5, 2, 0, 1);  // 10 members
  HTable ht = build_h_table(p);
  for (int m = 0; m < p.size(); ++m)
    for (int i = 1; i <= d5.rank(); ++i) {
      if (!ht.defined(m, i)) continue;
      std::set<int> values;
      int chains = 0;
      all_chain_values(p, m, i, values, chains, 100000);
      CHECK(chains >= 1);
      CHECK(values == std::set<int>{ht.entry(m, i)});
    }
}

TEST_CASE("sampled chains on a larger orbit agree") {
  RootSystem d6 = build("D6");
  MonoidalPoset p = poset_of(d6, 2, 0);  // 180 members
  HTable ht = build_h_table(p);
  HBudget budget;
  budget.exhaustive_member_cap = 50;  // force the sampling path
  budget.sampled_chains = 20;
  CHECK(verify_h_well_defined(p, ht, budget).pass);
}

TEST_CASE("value-table relations") {
  for (auto [name, size, variant, k] :
       std::vector<std::tuple<std::string, int, int, int>>{
           {"A5", 2, 0, 0}, {"A5", 1, 0, 0}, {"D4", 1, 0, 0}, {"D5", 2, 0, 0},
           {"D5", 2, 0, 1}, {"E6", 2, 0, 0}}) {
    RootSystem rs = build(name);
    MonoidalPoset p = poset_of(rs, size, variant, k);
    HTable ht = build_h_table(p);
    HeckeContext ctx(rs, p.c_nodes);
    HReport rep = verify_h_relations(p, ht, ctx);
    INFO(name, " first failure: ", rep.failures.empty() ? "-" : rep.failures[0]);
    CHECK(rep.pass);
    CHECK(rep.checks > 0);
  }
}

TEST_CASE("every generator appears at a minimal member") {
  for (auto [name, size, variant, k] :
       std::vector<std::tuple<std::string, int, int, int>>{
           {"A5", 2, 0, 0}, {"D4", 1, 0, 0}, {"D5", 2, 0, 1}, {"E6", 2, 0, 0}}) {
    RootSystem rs = build(name);
    MonoidalPoset p = poset_of(rs, size, variant, k);
    HTable ht = build_h_table(p);
    CHECK(verify_h_surjective_at_minima(p, ht).pass);
  }
}

TEST_CASE("orbits with empty C have no orthogonal pairs at all") {
  RootSystem e6 = build("E6");
  MonoidalPoset p = poset_of(e6, 4, 0);
  HTable ht = build_h_table(p);  // would throw if a pair existed
  for (int m = 0; m < p.size(); ++m)
    for (int i = 1; i <= e6.rank(); ++i) CHECK_FALSE(ht.defined(m, i));
}

TEST_CASE("h-table JSON") {
  RootSystem d5 = build("D5");
  MonoidalPoset p = poset_of(d5, 2, 0);
  HTable ht = build_h_table(p);
  std::string js = h_table_to_json(p, ht);
  int m = p.orbit.index_of.at(parse_root_list(d5, "e3+e4,e1+e2"));
  std::string expected = "{\"member\": " + std::to_string(m) +
                         ", \"i\": 1, \"h\": 2, \"chain\": [2, 1]}";
  CHECK(js.find(expected) != std::string::npos);
}
