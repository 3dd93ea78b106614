#include "orthoposet/poset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "orthoposet/weyl.hpp"

namespace orthoposet {

const char* to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::FixesInB: return "in_b";
    case EdgeClass::FixesPerp: return "perp";
    case EdgeClass::Raises: return "raises";
    case EdgeClass::Lowers: return "lowers";
  }
  return "?";
}

Ordering compare_sets(const RootSystem& rs, const OrthoSet& b, const OrthoSet& c) {
  if (b == c) return Ordering::Equal;
  int min_b = -1, min_c = -1;
  for (int x : b)
    if (!std::binary_search(c.begin(), c.end(), x))
      if (min_b < 0 || rs.height(x) < min_b) min_b = rs.height(x);
  for (int x : c)
    if (!std::binary_search(b.begin(), b.end(), x))
      if (min_c < 0 || rs.height(x) < min_c) min_c = rs.height(x);
  if (min_b < min_c) return Ordering::Less;
  if (min_c < min_b) return Ordering::Greater;
  return Ordering::Incomparable;
}

EdgeClass classify_edge(const RootSystem& rs, int node, const OrthoSet& b) {
  int ai = rs.simple_root(node);
  if (std::binary_search(b.begin(), b.end(), ai)) return EdgeClass::FixesInB;
  bool perp = true;
  for (int beta : b)
    if (rs.inner(ai, beta) != 0) { perp = false; break; }
  if (perp) return EdgeClass::FixesPerp;
  switch (compare_sets(rs, act_node(rs, node, b), b)) {
    case Ordering::Greater: return EdgeClass::Raises;
    case Ordering::Less: return EdgeClass::Lowers;
    default:
      throw std::logic_error("B and r_iB are incomparable; the orbit cannot be admissible");
  }
}

MonoidalPoset build_poset(const RootSystem& rs, OrbitData orbit) {
  if (!is_admissible_def(orbit)) throw std::runtime_error("orbit not admissible");
  MonoidalPoset p;
  p.rs = &rs;
  p.orbit = std::move(orbit);
  const int n = rs.rank();
  const int size = p.orbit.size();

  p.edge_class.assign(size, std::vector<EdgeClass>(n));
  for (int m = 0; m < size; ++m)
    for (int i = 1; i <= n; ++i)
      p.edge_class[m][i - 1] = classify_edge(rs, i, p.orbit.members[m]);

  p.b0 = -1;
  for (int m = 0; m < size; ++m) {
    bool raised = false;
    for (int i = 0; i < n; ++i)
      if (p.edge_class[m][i] == EdgeClass::Raises) { raised = true; break; }
    if (!raised) {
      if (p.b0 >= 0) throw std::logic_error("two maximal members in an admissible orbit");
      p.b0 = m;
    }
  }
  if (p.b0 < 0) throw std::logic_error("no maximal member in an admissible orbit");

  p.level.assign(size, -1);
  p.parent_node.assign(size, -1);
  p.level[p.b0] = 0;
  std::vector<int> queue{p.b0};
  for (size_t h = 0; h < queue.size(); ++h) {
    int m = queue[h];
    for (int i = 1; i <= n; ++i) {
      if (p.edge_class[m][i - 1] != EdgeClass::Lowers) continue;
      int down = p.orbit.edge(m, i);
      if (p.level[down] < 0) {
        p.level[down] = p.level[m] + 1;
        queue.push_back(down);
      }
    }
  }
  for (int m = 0; m < size; ++m) {
    if (p.level[m] < 0)
      throw std::logic_error("orbit member unreachable from the maximal element");
    if (m == p.b0) continue;
    for (int i = 1; i <= n; ++i)
      if (p.edge_class[m][i - 1] == EdgeClass::Raises) { p.parent_node[m] = i; break; }
    if (p.parent_node[m] < 0)
      throw std::logic_error("non-maximal member with no raising edge");
  }

  p.c_nodes = orthogonal_nodes(rs, p.orbit.members[p.b0]);
  return p;
}

const OrthoSet& maximal_element(const MonoidalPoset& p) { return p.member(p.b0); }

std::vector<int> MonoidalPoset::min_word(int member) const {
  std::vector<int> word;
  int m = member;
  while (m != b0) {
    int j = parent_node[m];
    word.push_back(j);
    m = orbit.edge(m, j);
  }
  return word;
}

std::vector<int> MonoidalPoset::minimal_members() const {
  std::vector<int> mins;
  for (int m = 0; m < size(); ++m) {
    bool lowers = false;
    for (size_t i = 0; i < edge_class[m].size(); ++i)
      if (edge_class[m][i] == EdgeClass::Lowers) { lowers = true; break; }
    if (!lowers) mins.push_back(m);
  }
  return mins;
}

void AxiomReport::fail(const std::string& what) {
  pass = false;
  if (failures.size() < 16) failures.push_back(what);
}

namespace {

std::string loc(const MonoidalPoset& p, int m) {
  std::ostringstream os;
  os << "member " << m << " {";
  const OrthoSet& b = p.member(m);
  for (size_t k = 0; k < b.size(); ++k) os << (k ? "," : "") << p.rs->root_repr(b[k]);
  os << "}";
  return os.str();
}

}  // namespace

AxiomReport verify_order_axioms(const MonoidalPoset& p, const AxiomOptions& opt) {
  AxiomReport rep;
  const RootSystem& rs = *p.rs;
  const int n = rs.rank();
  const int size = p.size();
  auto cmp = [&](int a, int b) { return compare_sets(rs, p.member(a), p.member(b)); };
  auto less = [&](int a, int b) { return cmp(a, b) == Ordering::Less; };

  for (int m = 0; m < size; ++m) {
    const OrthoSet& B = p.member(m);
    for (int i = 1; i <= n; ++i) {
      ++rep.checks;
      EdgeClass ci = p.cls(m, i);
      int riB = p.orbit.edge(m, i);
      int ai = rs.simple_root(i);
      bool in_b = std::binary_search(B.begin(), B.end(), ai);
      bool perp = !in_b;
      bool moved = false;
      for (int beta : B) {
        int ip = rs.inner(ai, beta);
        if (ip != 0 && beta != ai) moved = true;
        if (ip != 0) perp = false;
      }
      // Moving edges are exactly those with alpha_i outside B and B-perp,
      // and then B != r_iB and the two sets are comparable.
      if ((ci == EdgeClass::Raises || ci == EdgeClass::Lowers) != (!in_b && !perp))
        rep.fail("edge class inconsistent with membership at " + loc(p, m));
      if (moved && !in_b && riB == m)
        rep.fail("r_i moves a root of B but fixes B at " + loc(p, m));
      if (ci == EdgeClass::Raises || ci == EdgeClass::Lowers) {
        Ordering o = cmp(riB, m);
        if (o == Ordering::Incomparable)
          rep.fail("B and r_iB incomparable at " + loc(p, m));
        if ((ci == EdgeClass::Raises) != (o == Ordering::Greater))
          rep.fail("edge class disagrees with comparison at " + loc(p, m));
        EdgeClass back = p.cls(riB, i);
        if ((ci == EdgeClass::Raises) != (back == EdgeClass::Lowers))
          rep.fail("raise/lower not mutually inverse at " + loc(p, m));
        if (ci == EdgeClass::Raises && p.level[riB] != p.level[m] - 1)
          rep.fail("raising edge does not drop the level by one at " + loc(p, m));
      }
    }
  }

  // Pairwise interaction clauses.
  for (int m = 0; m < size; ++m) {
    for (int i = 1; i <= n; ++i) {
      int riB = p.orbit.edge(m, i);
      for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        ++rep.checks;
        int rjB = p.orbit.edge(m, j);
        int rirjB = p.orbit.edge(rjB, i);
        bool adj = rs.dtype().adjacent(i, j);

        // Adjacent pair with alpha_i orthogonal to B: the action of r_i on
        // r_jB follows the action of r_j on B.
        if (adj && p.cls(m, i) == EdgeClass::FixesPerp) {
          if (p.cls(m, j) == EdgeClass::Lowers && !less(rirjB, rjB))
            rep.fail("perp node fails to lower after a lowering at " + loc(p, m));
          if (p.cls(m, j) == EdgeClass::Raises && !less(rjB, rirjB))
            rep.fail("perp node fails to raise after a raising at " + loc(p, m));
        }

        bool i_lowers = p.cls(m, i) == EdgeClass::Lowers;
        bool j_lowers = p.cls(m, j) == EdgeClass::Lowers;
        bool i_raises = p.cls(m, i) == EdgeClass::Raises;
        bool j_raises = p.cls(m, j) == EdgeClass::Raises;

        if (!adj && i_lowers && j_lowers && riB != rjB) {
          if (!less(rirjB, rjB) || !less(rirjB, riB))
            rep.fail("commuting double descent fails at " + loc(p, m));
        }
        if (adj && i_lowers && j_lowers) {
          if (rirjB != rjB) {
            int rjriB = p.orbit.edge(riB, j);
            int ririjB = p.orbit.edge(p.orbit.edge(rjB, i), j);  // r_j r_i r_j B
            int rirjriB = p.orbit.edge(rjriB, i);
            if (!less(rirjB, rjB) || !less(rjriB, riB) || !less(rirjriB, rirjB) ||
                !less(rirjriB, rjriB) || rirjriB != ririjB)
              rep.fail("adjacent double descent fails at " + loc(p, m));
          } else {
            // Equal products force the height-two root alpha_i + alpha_j in B.
            RootVec v = rs.root(rs.simple_root(i));
            const RootVec& aj = rs.root(rs.simple_root(j));
            for (int c = 0; c < n; ++c) v[c] += aj[c];
            SignedRoot s = rs.lookup(v);
            if (s <= 0 ||
                !std::binary_search(p.member(m).begin(), p.member(m).end(), root_index(s)))
              rep.fail("equal adjacent descents without alpha_i+alpha_j at " + loc(p, m));
          }
        }

        if (!adj && i < j && less(rirjB, riB) && less(riB, m)) {
          if (!(less(rirjB, rjB) && less(rjB, m)))
            rep.fail("commuting descent chain asymmetry at " + loc(p, m));
        }
        if (!adj && i < j && i_raises && j_raises && riB != rjB) {
          if (!less(riB, rirjB) || !less(rjB, rirjB))
            rep.fail("commuting double ascent fails at " + loc(p, m));
        }
        if (adj && i_raises && j_raises) {
          int rjriB = p.orbit.edge(riB, j);
          int rirjriB = p.orbit.edge(rjriB, i);
          int rjrirjB = p.orbit.edge(rirjB, j);
          if (!less(riB, rjriB) || !less(rjriB, rirjriB) || !less(rjB, rirjB) ||
              !less(rirjB, rjrirjB))
            rep.fail("adjacent double ascent chain fails at " + loc(p, m));
        }
        if (adj) {
          int rjriB = p.orbit.edge(riB, j);
          int rjrirjB = p.orbit.edge(rirjB, j);
          int rirjriB = p.orbit.edge(rjriB, i);
          if (less(rjrirjB, rjriB) && less(rjriB, riB) && less(riB, m)) {
            if (!(less(rirjriB, rirjB) && less(rirjB, rjB) && less(rjB, m)))
              rep.fail("braid descent chain asymmetry at " + loc(p, m));
          }
        }

        // Two distinct nodes raising to the same member commute and differ
        // on a pair beta, beta+alpha_i+alpha_j of members.
        if (i < j && i_raises && j_raises && riB == rjB) {
          if (adj) {
            rep.fail("adjacent nodes raise to the same member at " + loc(p, m));
            continue;
          }
          const OrthoSet& B = p.member(m);
          int best = -1;
          for (int beta : B) {
            if (rs.inner(rs.simple_root(i), beta) == 0 &&
                rs.inner(rs.simple_root(j), beta) == 0)
              continue;
            if (best < 0 || rs.height(beta) < rs.height(best)) best = beta;
          }
          if (best < 0) {
            rep.fail("equal raisings that move no root at " + loc(p, m));
            continue;
          }
          RootVec v = rs.root(best);
          const RootVec& aiv = rs.root(rs.simple_root(i));
          const RootVec& ajv = rs.root(rs.simple_root(j));
          for (int c = 0; c < n; ++c) v[c] += aiv[c] + ajv[c];
          SignedRoot s = rs.lookup(v);
          if (s <= 0 || !std::binary_search(B.begin(), B.end(), root_index(s)))
            rep.fail("equal raisings without beta+alpha_i+alpha_j at " + loc(p, m));
        }
      }
    }
  }

  // Level = length of the canonical minimal word, words are reduced, and
  // left descents of the canonical words are raising nodes.
  {
    std::vector<WeylElement> elem(size, WeylElement::identity(rs));
    std::vector<int> order(size);
    for (int m = 0; m < size; ++m) order[m] = m;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return p.level[a] < p.level[b]; });
    std::vector<WeylElement> gens;
    for (int i = 1; i <= n; ++i) gens.push_back(WeylElement::generator(rs, i));
    for (int m : order) {
      if (m == p.b0) continue;
      int j = p.parent_node[m];
      elem[m] = gens[j - 1] * elem[p.orbit.edge(m, j)];
    }
    for (int m = 0; m < size; ++m) {
      ++rep.checks;
      if (elem[m].length() != p.level[m])
        rep.fail("canonical word is not reduced at " + loc(p, m));
      WeylElement inv = elem[m].inverse();
      for (int i = 1; i <= n; ++i)
        if (inv.images()[i - 1] < 0 && p.cls(m, i) != EdgeClass::Raises)
          rep.fail("left descent of a minimal word is not a raising node at " + loc(p, m));
    }
  }

  if (size <= opt.antisymmetry_cap) {
    for (int a = 0; a < size; ++a)
      for (int b = a + 1; b < size; ++b) {
        ++rep.checks;
        Ordering ab = cmp(a, b), ba = cmp(b, a);
        bool ok = (ab == Ordering::Less && ba == Ordering::Greater) ||
                  (ab == Ordering::Greater && ba == Ordering::Less) ||
                  (ab == Ordering::Incomparable && ba == Ordering::Incomparable);
        if (!ok) rep.fail("comparison is not antisymmetric");
      }
  }
  if (size <= opt.transitivity_cap) {
    for (int a = 0; a < size; ++a)
      for (int b = 0; b < size; ++b) {
        if (b == a || !less(a, b)) continue;
        for (int c = 0; c < size; ++c) {
          if (c == a || c == b || !less(b, c)) continue;
          ++rep.checks;
          if (!less(a, c)) rep.fail("comparison is not transitive");
        }
      }
  }

  if (rep.failures.size() > opt.max_failures) rep.failures.resize(opt.max_failures);
  return rep;
}

std::string poset_to_dot(const MonoidalPoset& p) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
  for (int m = 0; m < p.size(); ++m) {
    os << "  n" << m << " [label=\"" << m << " (L" << p.level[m] << ")\\n{";
    const OrthoSet& b = p.member(m);
    for (size_t k = 0; k < b.size(); ++k) os << (k ? "," : "") << p.rs->root_repr(b[k]);
    os << "}\"];\n";
  }
  for (int m = 0; m < p.size(); ++m)
    for (int i = 1; i <= p.rs->rank(); ++i)
      if (p.cls(m, i) == EdgeClass::Raises)
        os << "  n" << m << " -> n" << p.orbit.edge(m, i) << " [label=\"" << i << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string poset_to_json(const MonoidalPoset& p) {
  std::string orbit_json = orbit_to_json(p.orbit, true);
  orbit_json.pop_back();  // strip closing brace, extend the object
  std::ostringstream os;
  os << orbit_json << ", \"b0\": " << p.b0 << ", \"levels\": [";
  for (int m = 0; m < p.size(); ++m) os << (m ? ", " : "") << p.level[m];
  os << "], \"edge_class\": [";
  for (int m = 0; m < p.size(); ++m) {
    if (m) os << ", ";
    os << '[';
    for (int i = 1; i <= p.rs->rank(); ++i)
      os << (i > 1 ? ", " : "") << '"' << to_string(p.cls(m, i)) << '"';
    os << ']';
  }
  os << "]}";
  return os.str();
}

}  // namespace orthoposet
