#include <algorithm>
#include <set>

#include "doctest.h"
#include "orthoposet/root_system.hpp"

using namespace orthoposet;

namespace {

RootSystem build(const std::string& name) {
  return RootSystem::build(DiagramType::parse(name));
}

int simple_count_formula(const DiagramType& t) { return t.positive_root_count(); }

// Independent enumeration of the classical positive systems in epsilon
// coordinates, used as an oracle against the reflection closure.
std::set<std::vector<int>> classical_eps_roots(const DiagramType& t) {
  std::set<std::vector<int>> out;
  if (t.family == Family::A) {
    for (int i = 0; i <= t.rank; ++i)
      for (int j = i + 1; j <= t.rank; ++j) {
        std::vector<int> e(t.rank + 1, 0);
        e[i] = 1;
        e[j] = -1;
        out.insert(e);
      }
  } else if (t.family == Family::D) {
    for (int i = 0; i < t.rank; ++i)
      for (int j = i + 1; j < t.rank; ++j)
        for (int s : {-1, 1}) {
          std::vector<int> e(t.rank, 0);
          e[i] = 1;
          e[j] = s;
          out.insert(e);
        }
  }
  return out;
}

}  // namespace

TEST_CASE("positive root counts match the classical values") {
  CHECK(build("A3").num_positive() == 6);
  CHECK(build("E8").num_positive() == 120);
  CHECK(build("D4").num_positive() == 12);
  for (const char* name : {"A1", "A2", "A5", "A8", "D5", "D7", "E6", "E7"}) {
    RootSystem rs = build(name);
    CHECK(rs.num_positive() == simple_count_formula(rs.dtype()));
  }
}

TEST_CASE("closure agrees with the classical epsilon enumeration") {
  for (const char* name : {"A4", "A6", "D4", "D5", "D6"}) {
    RootSystem rs = build(name);
    std::set<std::vector<int>> got;
    for (int k = 0; k < rs.num_positive(); ++k) got.insert(rs.eps_form(k));
    CHECK(got == classical_eps_roots(rs.dtype()));
  }
}

TEST_CASE("unsupported diagrams are rejected") {
  CHECK_THROWS_WITH_AS(DiagramType::parse("D3"), doctest::Contains("unsupported diagram"),
                       std::invalid_argument);
  CHECK_THROWS_AS(DiagramType::parse("E9"), std::invalid_argument);
  CHECK_THROWS_AS(DiagramType::parse("B4"), std::invalid_argument);
  CHECK_THROWS_AS(DiagramType::parse("A0"), std::invalid_argument);
}

TEST_CASE("inner products") {
  RootSystem rs = build("E7");
  for (int i = 1; i <= 7; ++i) CHECK(rs.inner(rs.simple_root(i), rs.simple_root(i)) == 2);
  CHECK(rs.inner(rs.simple_root(3), rs.simple_root(4)) == -1);
  CHECK(rs.inner(rs.simple_root(2), rs.simple_root(4)) == -1);
  CHECK(rs.inner(rs.simple_root(2), rs.simple_root(3)) == 0);

  // Highest root of E7 against alpha_1, expanded through the Gram matrix by
  // hand: only the alpha_1 and alpha_3 terms contribute 2*2 + 3*(-1) = 1.
  RootVec hr{2, 2, 3, 4, 3, 2, 1};
  SignedRoot s = rs.lookup(hr);
  REQUIRE(s > 0);
  CHECK(rs.inner(root_index(s), rs.simple_root(1)) == 1);
}

TEST_CASE("heights") {
  RootSystem e7 = build("E7");
  for (int i = 1; i <= 7; ++i) CHECK(e7.height(e7.simple_root(i)) == 1);
  CHECK(e7.height(root_index(e7.lookup({2, 2, 3, 4, 3, 2, 1}))) == 17);
  RootSystem e8 = build("E8");
  CHECK(e8.height(root_index(e8.lookup({2, 3, 4, 6, 5, 4, 3, 2}))) == 29);
}

TEST_CASE("simple reflections") {
  RootSystem rs = build("D5");
  for (int i = 1; i <= 5; ++i)
    CHECK(rs.reflect_node(i, rs.simple_root(i) + 1) == -(rs.simple_root(i) + 1));
  // orthogonal roots are fixed, adjacent simple roots are raised
  CHECK(rs.reflect_node(1, rs.simple_root(3) + 1) == rs.simple_root(3) + 1);
  SignedRoot s = rs.reflect_node(2, rs.simple_root(1) + 1);
  CHECK(s > 0);
  CHECK(rs.root(root_index(s)) == RootVec{1, 1, 0, 0, 0});

  SUBCASE("involution and height steps") {
    for (int i = 1; i <= 5; ++i)
      for (int k = 0; k < rs.num_positive(); ++k) {
        CHECK(rs.reflect_node(i, rs.reflect_node(i, k + 1)) == k + 1);
        if (k != rs.simple_root(i)) {
          SignedRoot t = rs.reflect_node(i, k + 1);
          REQUIRE(t > 0);
          int dh = rs.height(root_index(t)) - rs.height(k);
          CHECK(dh >= -1);
          CHECK(dh <= 1);
        }
      }
  }

  SUBCASE("inner products are reflection invariant") {
    for (int i = 1; i <= 5; ++i)
      for (int a = 0; a < rs.num_positive(); a += 3)
        for (int b = 0; b < rs.num_positive(); b += 5) {
          SignedRoot ia = rs.reflect_node(i, a + 1), ib = rs.reflect_node(i, b + 1);
          int sgn = (ia > 0) == (ib > 0) ? 1 : -1;
          CHECK(rs.inner(root_index(ia), root_index(ib)) * sgn == rs.inner(a, b));
        }
  }
}

TEST_CASE("general reflections") {
  RootSystem rs = build("A3");
  int d = root_index(rs.lookup({1, 1, 0}));
  CHECK(rs.reflect_root(d, d + 1) == -(d + 1));
  int r = root_index(rs.lookup({0, 1, 1}));
  // (a1+a2, a2+a3) = 0, so the reflection fixes the root.
  CHECK(rs.inner(d, r) == 0);
  CHECK(rs.reflect_root(d, r + 1) == r + 1);
  CHECK(rs.reflect_general(rs.root(d), rs.root(r)) == rs.root(r));

  // reflect_general is plain lattice arithmetic: non-root vectors pass
  // through without validation.
  RootVec v{3, 0, -1};
  RootVec img = rs.reflect_general(rs.root(d), v);
  CHECK(rs.lookup(img) == 0);
  CHECK(img == RootVec{-1, -4, -1});  // (d, v) = 4
}

TEST_CASE("canonical root order is by height then lexicographic coefficients") {
  RootSystem rs = build("D4");
  for (int k = 1; k < rs.num_positive(); ++k) {
    int hp = rs.height(k - 1), hk = rs.height(k);
    CHECK(hp <= hk);
    if (hp == hk) CHECK(rs.root(k - 1) < rs.root(k));
  }
}

TEST_CASE("epsilon conversions round trip") {
  for (const char* name : {"A5", "D6"}) {
    RootSystem rs = build(name);
    for (int k = 0; k < rs.num_positive(); ++k)
      CHECK(rs.eps_to_coeffs(rs.eps_form(k)) == rs.root(k));
  }
  RootSystem e6 = build("E6");
  CHECK_THROWS_AS(e6.eps_form(0), std::invalid_argument);
}

TEST_CASE("root system JSON") {
  RootSystem rs = build("A2");
  CHECK(rs.to_json() ==
        "{\"type\": \"A2\", \"positive_roots\": [[0, 1], [1, 0], [1, 1]]}");
}
