#include "orthoposet/h_elements.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace orthoposet {

namespace {

bool perp_not_in(const RootSystem& rs, const OrthoSet& b, int node) {
  int ai = rs.simple_root(node);
  if (std::binary_search(b.begin(), b.end(), ai)) return false;
  for (int beta : b)
    if (rs.inner(ai, beta) != 0) return false;
  return true;
}

bool vec_perp_to(const RootSystem& rs, const OrthoSet& b, const RootVec& v) {
  for (int beta : b)
    if (rs.inner_vec(v, rs.root(beta)) != 0) return false;
  return true;
}

int lowest_raising(const MonoidalPoset& p, int member) {
  for (int j = 1; j <= p.rs->rank(); ++j)
    if (p.cls(member, j) == EdgeClass::Raises) return j;
  throw std::logic_error("non-maximal member with no raising node");
}

}  // namespace

ChainWord v_chain(const MonoidalPoset& p, int member, int node) {
  const RootSystem& rs = *p.rs;
  if (!perp_not_in(rs, p.member(member), node))
    throw std::invalid_argument("alpha_" + std::to_string(node) +
                                " is not orthogonal to the member set");
  ChainWord chain;
  chain.member = member;
  chain.node = node;
  int m = member, i = node;
  while (m != p.b0) {
    int j = lowest_raising(p, m);
    int up = p.orbit.edge(m, j);
    if (!rs.dtype().adjacent(i, j)) {
      chain.word.push_back(j);
      if (!perp_not_in(rs, p.member(up), i))
        throw std::logic_error("chain invariant failed: alpha_i not orthogonal after step");
      m = up;
    } else {
      RootVec v = rs.root(rs.simple_root(i));
      const RootVec& aj = rs.root(rs.simple_root(j));
      for (int c = 0; c < rs.rank(); ++c) v[c] += aj[c];
      if (!vec_perp_to(rs, p.member(up), v))
        throw std::logic_error("chain invariant failed: alpha_i+alpha_j not orthogonal");
      if (p.cls(up, i) != EdgeClass::Raises)
        throw std::logic_error("chain invariant failed: r_i does not raise r_jB");
      chain.word.push_back(j);
      chain.word.push_back(i);
      m = p.orbit.edge(up, i);
      if (!perp_not_in(rs, p.member(m), j))
        throw std::logic_error("chain invariant failed: alpha_j not orthogonal after step");
      i = j;
    }
  }
  if (static_cast<int>(chain.word.size()) != p.level[member])
    throw std::logic_error("chain length differs from the level");
  return chain;
}

SignedRoot conjugate_root_along(const RootSystem& rs, const std::vector<int>& word,
                                int node) {
  SignedRoot s = rs.simple_root(node) + 1;
  for (int letter : word) s = rs.reflect_node(letter, s);
  return s;
}

int h_value(const MonoidalPoset& p, int member, int node) {
  const RootSystem& rs = *p.rs;
  ChainWord chain = v_chain(p, member, node);
  SignedRoot s = conjugate_root_along(rs, chain.word, node);
  int idx = root_index(s);
  for (int c : p.c_nodes)
    if (rs.simple_root(c) == idx) return c;
  throw std::logic_error("well-definedness violated: conjugate root " + rs.root_repr(idx) +
                         " is not a fundamental root of C");
}

HTable build_h_table(const MonoidalPoset& p) {
  const RootSystem& rs = *p.rs;
  const int n = rs.rank();
  HTable ht;
  ht.h.assign(p.size(), std::vector<int8_t>(n, -1));

  std::vector<int> order(p.size());
  for (int m = 0; m < p.size(); ++m) order[m] = m;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return p.level[a] < p.level[b]; });

  for (int m : order) {
    const OrthoSet& b = p.member(m);
    for (int i = 1; i <= n; ++i) {
      if (!perp_not_in(rs, b, i)) continue;
      if (p.c_nodes.empty())
        throw std::logic_error(
            "pair with alpha_i orthogonal to a member exists although C is empty");
      int value;
      if (m == p.b0) {
        bool in_c = std::find(p.c_nodes.begin(), p.c_nodes.end(), i) != p.c_nodes.end();
        if (!in_c) throw std::logic_error("orthogonal node at the maximal member not in C");
        value = i;
      } else {
        int j = lowest_raising(p, m);
        int up = p.orbit.edge(m, j);
        if (!rs.dtype().adjacent(i, j)) {
          value = ht.entry(up, i);
        } else {
          int up2 = p.orbit.edge(up, i);
          value = ht.entry(up2, j);
        }
        if (value < 0) throw std::logic_error("value recursion hit an undefined entry");
      }
      ht.h[m][i - 1] = static_cast<int8_t>(value);
    }
  }
  return ht;
}

HReport verify_h_well_defined(const MonoidalPoset& p, const HTable& ht,
                              const HBudget& budget) {
  HReport rep;
  const RootSystem& rs = *p.rs;
  const int n = rs.rank();

  // Reachable-value sets over all chains, as node bitmasks.
  std::vector<std::vector<uint16_t>> reach(p.size(), std::vector<uint16_t>(n, 0));
  std::vector<int> order(p.size());
  for (int m = 0; m < p.size(); ++m) order[m] = m;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return p.level[a] < p.level[b]; });
  for (int m : order) {
    const OrthoSet& b = p.member(m);
    for (int i = 1; i <= n; ++i) {
      if (!ht.defined(m, i)) continue;
      (void)b;
      uint16_t mask = 0;
      if (m == p.b0) {
        mask = static_cast<uint16_t>(1u << i);
      } else {
        for (int j = 1; j <= n; ++j) {
          if (p.cls(m, j) != EdgeClass::Raises) continue;
          int up = p.orbit.edge(m, j);
          if (!rs.dtype().adjacent(i, j)) {
            mask |= reach[up][i - 1];
          } else {
            int up2 = p.orbit.edge(up, i);
            mask |= reach[up2][j - 1];
          }
        }
      }
      reach[m][i - 1] = mask;
      ++rep.checks;
      uint16_t expect = static_cast<uint16_t>(1u << ht.entry(m, i));
      if (mask != expect) {
        std::ostringstream os;
        os << "chains from member " << m << " node " << i
           << " reach value mask " << mask << " (table value " << ht.entry(m, i) << ")";
        rep.fail(os.str());
      }
    }
  }

  if (p.size() > budget.exhaustive_member_cap) {
    std::mt19937_64 rng(budget.rng_seed);
    for (int m = 0; m < p.size(); ++m) {
      for (int i = 1; i <= n; ++i) {
        if (!ht.defined(m, i)) continue;
        for (int trial = 0; trial < budget.sampled_chains; ++trial) {
          int cur = m, node = i;
          while (cur != p.b0) {
            int raising[8];
            int cnt = 0;
            for (int j = 1; j <= n; ++j)
              if (p.cls(cur, j) == EdgeClass::Raises) raising[cnt++] = j;
            int j = raising[rng() % cnt];
            int up = p.orbit.edge(cur, j);
            if (!rs.dtype().adjacent(node, j)) {
              cur = up;
            } else {
              cur = p.orbit.edge(up, node);
              node = j;
            }
          }
          ++rep.checks;
          if (node != ht.entry(m, i)) {
            std::ostringstream os;
            os << "sampled chain from member " << m << " node " << i << " gives "
               << node << " != " << ht.entry(m, i);
            rep.fail(os.str());
          }
        }
      }
    }
  }
  return rep;
}

HReport verify_h_relations(const MonoidalPoset& p, const HTable& ht,
                           const HeckeContext& ctx) {
  HReport rep;
  const RootSystem& rs = *p.rs;
  const int n = rs.rank();

  // (i) quadratic relation for every generator of Z.
  for (int c : p.c_nodes) {
    ++rep.checks;
    HeckeElement t = hecke_gen(ctx, c);
    HeckeElement lhs = hecke_mul(ctx, t, t);
    HeckeElement rhs = hecke_sub(hecke_one(ctx), hecke_scale(t, PolyM::m()));
    if (!(lhs == rhs)) rep.fail("quadratic relation fails for node " + std::to_string(c));
  }

  for (int m = 0; m < p.size(); ++m) {
    for (int i = 1; i <= n; ++i) {
      if (!ht.defined(m, i)) continue;
      HeckeElement hi = hecke_gen(ctx, ht.entry(m, i));
      // (ii) and (iii): interaction of two values at the same member.
      for (int j = i + 1; j <= n; ++j) {
        if (!ht.defined(m, j)) continue;
        ++rep.checks;
        HeckeElement hj = hecke_gen(ctx, ht.entry(m, j));
        if (!rs.dtype().adjacent(i, j)) {
          if (!(hecke_mul(ctx, hi, hj) == hecke_mul(ctx, hj, hi)))
            rep.fail("values at member " + std::to_string(m) + " nodes " +
                     std::to_string(i) + "," + std::to_string(j) + " do not commute");
        } else {
          HeckeElement lhs = hecke_mul(ctx, hecke_mul(ctx, hi, hj), hi);
          HeckeElement rhs = hecke_mul(ctx, hecke_mul(ctx, hj, hi), hj);
          if (!(lhs == rhs))
            rep.fail("values at member " + std::to_string(m) + " nodes " +
                     std::to_string(i) + "," + std::to_string(j) + " fail the braid relation");
        }
      }
      // (iv) invariance along non-adjacent moves.
      for (int j = 1; j <= n; ++j) {
        if (j == i || rs.dtype().adjacent(i, j)) continue;
        ++rep.checks;
        int up = p.orbit.edge(m, j);
        if (!ht.defined(up, i)) {
          rep.fail("value undefined after a commuting move at member " + std::to_string(m));
          continue;
        }
        if (ht.entry(up, i) != ht.entry(m, i))
          rep.fail("value changes along a commuting move at member " + std::to_string(m));
      }
      // (v) transport along adjacent moves when alpha_j is not orthogonal.
      for (int j = 1; j <= n; ++j) {
        if (!rs.dtype().adjacent(i, j)) continue;
        bool aj_moves = false;
        for (int beta : p.member(m))
          if (rs.inner(rs.simple_root(j), beta) != 0) { aj_moves = true; break; }
        if (!aj_moves) continue;
        ++rep.checks;
        int rjB = p.orbit.edge(m, j);
        if (rjB == m) {
          rep.fail("alpha_j not orthogonal to B yet r_jB = B at member " + std::to_string(m));
          continue;
        }
        int target = p.orbit.edge(rjB, i);
        if (!ht.defined(target, j)) {
          rep.fail("transported value undefined at member " + std::to_string(m));
          continue;
        }
        if (ht.entry(target, j) != ht.entry(m, i))
          rep.fail("value transport fails at member " + std::to_string(m) + " nodes " +
                   std::to_string(i) + "," + std::to_string(j));
      }
    }
  }
  return rep;
}

HReport verify_h_surjective_at_minima(const MonoidalPoset& p, const HTable& ht) {
  HReport rep;
  std::vector<int> minima = p.minimal_members();
  for (int c : p.c_nodes) {
    ++rep.checks;
    bool found = false;
    for (int m : minima) {
      for (int i = 1; i <= p.rs->rank() && !found; ++i)
        if (ht.defined(m, i) && ht.entry(m, i) == c) found = true;
      if (found) break;
    }
    if (!found)
      rep.fail("generator " + std::to_string(c) + " is not attained at any minimal member");
  }
  return rep;
}

std::string h_table_to_json(const MonoidalPoset& p, const HTable& ht) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (int m = 0; m < p.size(); ++m)
    for (int i = 1; i <= p.rs->rank(); ++i) {
      if (!ht.defined(m, i)) continue;
      if (!first) os << ", ";
      first = false;
      ChainWord chain = v_chain(p, m, i);
      os << "{\"member\": " << m << ", \"i\": " << i << ", \"h\": " << ht.entry(m, i)
         << ", \"chain\": [";
      for (size_t k = 0; k < chain.word.size(); ++k)
        os << (k ? ", " : "") << chain.word[k];
      os << "]}";
    }
  os << ']';
  return os.str();
}

}  // namespace orthoposet
