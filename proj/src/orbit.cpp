#include "orthoposet/orbit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orthoposet {

void validate_orthoset(const RootSystem& rs, const OrthoSet& b) {
  if (b.empty()) throw std::invalid_argument("empty root set");
  for (size_t k = 0; k < b.size(); ++k) {
    if (b[k] < 0 || b[k] >= rs.num_positive())
      throw std::invalid_argument("root index out of range");
    if (k > 0 && b[k] <= b[k - 1])
      throw std::invalid_argument("root indices must be strictly increasing");
  }
  for (size_t p = 0; p < b.size(); ++p)
    for (size_t q = p + 1; q < b.size(); ++q)
      if (rs.inner(b[p], b[q]) != 0)
        throw std::invalid_argument("roots " + rs.root_repr(b[p]) + " and " +
                                    rs.root_repr(b[q]) + " are not orthogonal");
}

namespace {

inline bool contains(const OrthoSet& b, int idx) {
  return std::binary_search(b.begin(), b.end(), idx);
}

}  // namespace

OrthoSet act_node(const RootSystem& rs, int node, const OrthoSet& b) {
  OrthoSet out(b.size());
  for (size_t k = 0; k < b.size(); ++k)
    out[k] = root_index(rs.reflect_node(node, b[k] + 1));
  std::sort(out.begin(), out.end());
  return out;
}

OrthoSet act_reflection(const RootSystem& rs, int delta_idx, const OrthoSet& b) {
  OrthoSet out(b.size());
  for (size_t k = 0; k < b.size(); ++k)
    out[k] = root_index(rs.reflect_root(delta_idx, b[k] + 1));
  std::sort(out.begin(), out.end());
  return out;
}

int moved_count(const RootSystem& rs, int delta_idx, const OrthoSet& b) {
  int moved = 0;
  for (int beta : b) {
    int img = root_index(rs.reflect_root(delta_idx, beta + 1));
    if (!contains(b, img)) ++moved;
  }
  return moved;
}

std::vector<int> orthogonal_nodes(const RootSystem& rs, const OrthoSet& b) {
  std::vector<int> nodes;
  for (int i = 1; i <= rs.rank(); ++i) {
    int ai = rs.simple_root(i);
    if (contains(b, ai)) continue;
    bool perp = true;
    for (int beta : b)
      if (rs.inner(ai, beta) != 0) { perp = false; break; }
    if (perp) nodes.push_back(i);
  }
  return nodes;
}

int other_reflection(const RootSystem& rs, int delta_r_idx, int beta_idx, int gamma_idx) {
  if (rs.inner(beta_idx, gamma_idx) != 0)
    throw std::invalid_argument("beta and gamma must be orthogonal");
  int cb = rs.inner(beta_idx, delta_r_idx);
  int cg = rs.inner(gamma_idx, delta_r_idx);
  if (cb == 0 || cg == 0)
    throw std::invalid_argument("beta and gamma must both be moved by the reflection");
  const RootVec& beta = rs.root(beta_idx);
  const RootVec& gamma = rs.root(gamma_idx);
  const RootVec& dr = rs.root(delta_r_idx);
  RootVec v(rs.rank());
  for (int i = 0; i < rs.rank(); ++i)
    v[i] = beta[i] + (cb == cg ? gamma[i] : -gamma[i]) - cb * dr[i];
  SignedRoot s = rs.lookup(v);
  if (s == 0) throw std::logic_error("commuting reflection root is not a root");
  int delta = root_index(s);
  if (rs.inner(delta, delta_r_idx) != 0)
    throw std::logic_error("commuting reflection root is not orthogonal");
  // Defining property {beta} = r s {gamma}.
  int img = root_index(rs.reflect_root(delta_r_idx, rs.reflect_root(delta, gamma_idx + 1)));
  if (img != beta_idx) throw std::logic_error("r s does not map gamma to beta");
  return delta;
}

OrbitData enumerate_orbit(const RootSystem& rs, const OrthoSet& seed, size_t max_members) {
  validate_orthoset(rs, seed);
  OrbitData orbit;
  orbit.rs = &rs;
  orbit.seed = seed;
  orbit.members.push_back(seed);
  orbit.index_of.emplace(seed, 0);
  const int n = rs.rank();
  for (size_t h = 0; h < orbit.members.size(); ++h) {
    orbit.edges.emplace_back(n, -1);
    for (int i = 1; i <= n; ++i) {
      OrthoSet img = act_node(rs, i, orbit.members[h]);
      auto [it, fresh] = orbit.index_of.emplace(img, orbit.members.size());
      if (fresh) {
        if (orbit.members.size() >= max_members)
          throw std::runtime_error("orbit exceeds the member limit");
        orbit.members.push_back(std::move(img));
      }
      orbit.edges[h][i - 1] = it->second;
    }
  }
  // Acting twice with the same node returns to the start.
  for (int m = 0; m < orbit.size(); ++m)
    for (int i = 1; i <= n; ++i)
      if (orbit.edges[orbit.edges[m][i - 1]][i - 1] != m)
        throw std::logic_error("orbit edge table is not involutive");
  return orbit;
}

std::optional<std::string> def_violation_at(const RootSystem& rs, const OrthoSet& b) {
  const int n = rs.rank();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j || rs.dtype().adjacent(i, j)) continue;
      const RootVec& ai = rs.root(rs.simple_root(i));
      const RootVec& aj = rs.root(rs.simple_root(j));
      for (int gamma : b) {
        RootVec v = rs.root(gamma);
        for (int c = 0; c < n; ++c) v[c] += aj[c] - ai[c];
        SignedRoot s = rs.lookup(v);
        if (s <= 0 || !contains(b, root_index(s))) continue;
        if (act_node(rs, i, b) != act_node(rs, j, b)) {
          std::ostringstream os;
          os << "r" << i << "B != r" << j << "B with gamma=" << rs.root_repr(gamma)
             << " and gamma-a" << i << "+a" << j << " both in B";
          return os.str();
        }
      }
    }
  return std::nullopt;
}

std::optional<std::string> moves_violation_at(const RootSystem& rs, const OrthoSet& b) {
  for (int d = 0; d < rs.num_positive(); ++d) {
    int m = moved_count(rs, d, b);
    if (m != 0 && m != 1 && m != 2 && m != 4) {
      std::ostringstream os;
      os << "reflection of " << rs.root_repr(d) << " moves " << m << " roots";
      return os.str();
    }
  }
  return std::nullopt;
}

bool is_admissible_def(const OrbitData& orbit) {
  for (const OrthoSet& b : orbit.members)
    if (def_violation_at(*orbit.rs, b)) return false;
  return true;
}

bool is_admissible_moves(const OrbitData& orbit) {
  for (const OrthoSet& b : orbit.members)
    if (moves_violation_at(*orbit.rs, b)) return false;
  return true;
}

namespace {

RootVec coeffs_from_pairs(int rank, std::initializer_list<std::pair<int, int>> terms) {
  RootVec v(rank, 0);
  for (auto [node, c] : terms) v[node - 1] = c;
  return v;
}

void push_root(const RootSystem& rs, OrthoSet& seed, const RootVec& v) {
  SignedRoot s = rs.lookup(v);
  if (s <= 0) throw std::logic_error("catalog seed entry is not a positive root");
  seed.push_back(root_index(s));
}

OrthoSet finish(const RootSystem& rs, OrthoSet seed) {
  std::sort(seed.begin(), seed.end());
  validate_orthoset(rs, seed);
  return seed;
}

OrthoSet seed_E(const RootSystem& rs, int size, int variant) {
  const int n = rs.rank();
  auto simple = [&](int i) { return coeffs_from_pairs(n, {{i, 1}}); };
  const RootVec beta = coeffs_from_pairs(n, {{2, 1}, {3, 1}, {4, 2}, {5, 1}});
  const RootVec gamma7 =
      n >= 7 ? coeffs_from_pairs(n, {{2, 1}, {3, 1}, {4, 2}, {5, 2}, {6, 2}, {7, 1}})
             : RootVec{};
  const RootVec hr7 =
      n >= 7 ? coeffs_from_pairs(n, {{1, 2}, {2, 2}, {3, 3}, {4, 4}, {5, 3}, {6, 2}, {7, 1}})
             : RootVec{};
  const RootVec hr8 =
      n == 8 ? coeffs_from_pairs(n, {{1, 2}, {2, 3}, {3, 4}, {4, 6}, {5, 5}, {6, 4}, {7, 3}, {8, 2}})
             : RootVec{};

  std::vector<RootVec> roots;
  auto add_simples = [&](std::initializer_list<int> nodes) {
    for (int i : nodes) roots.push_back(simple(i));
  };
  bool ok = true;
  if (n == 6) {
    if (variant != 0) ok = false;
    else if (size == 1) add_simples({2});
    else if (size == 2) add_simples({2, 5});
    else if (size == 3) add_simples({2, 3, 5});
    else if (size == 4) { add_simples({2, 3, 5}); roots.push_back(beta); }
    else ok = false;
  } else if (n == 7) {
    if (size == 1 && variant == 0) add_simples({2});
    else if (size == 2 && variant == 0) add_simples({2, 5});
    else if (size == 3 && variant == 0) add_simples({2, 5, 7});
    else if (size == 3 && variant == 1) add_simples({2, 3, 5});
    else if (size == 4 && variant == 0) add_simples({2, 3, 5, 7});
    else if (size == 4 && variant == 1) { add_simples({2, 3, 5}); roots.push_back(beta); }
    else if (size == 5 && variant == 0) { add_simples({2, 3, 5, 7}); roots.push_back(hr7); }
    else if (size == 6 && variant == 0) {
      add_simples({2, 3, 5, 7});
      roots.push_back(beta);
      roots.push_back(hr7);
    } else if (size == 7 && variant == 0) {
      add_simples({2, 3, 5, 7});
      roots.push_back(beta);
      roots.push_back(gamma7);
      roots.push_back(hr7);
    } else ok = false;
  } else {
    if (size == 1 && variant == 0) add_simples({2});
    else if (size == 2 && variant == 0) add_simples({2, 5});
    else if (size == 3 && variant == 0) add_simples({2, 3, 5});
    else if (size == 4 && variant == 0) add_simples({2, 3, 5, 7});
    else if (size == 4 && variant == 1) { add_simples({2, 3, 5}); roots.push_back(beta); }
    else if (size == 5 && variant == 0) { add_simples({2, 3, 5, 7}); roots.push_back(hr7); }
    else if (size == 6 && variant == 0) {
      add_simples({2, 3, 5, 7});
      roots.push_back(hr7);
      roots.push_back(hr8);
    } else if (size == 7 && variant == 0) {
      add_simples({2, 3, 5, 7});
      roots.push_back(beta);
      roots.push_back(hr7);
      roots.push_back(hr8);
    } else if (size == 8 && variant == 0) {
      add_simples({2, 3, 5, 7});
      roots.push_back(beta);
      roots.push_back(gamma7);
      roots.push_back(hr7);
      roots.push_back(hr8);
    } else ok = false;
  }
  if (!ok)
    throw std::invalid_argument("no catalog row " + rs.dtype().name() + " size " +
                                std::to_string(size) + " variant " +
                                std::to_string(variant) + "; valid rows:\n" +
                                table_rows_help(rs.dtype()));
  OrthoSet seed;
  for (const RootVec& v : roots) push_root(rs, seed, v);
  return finish(rs, seed);
}

}  // namespace

OrthoSet seed_from_table(const RootSystem& rs, int size, int variant, int k) {
  const DiagramType& dt = rs.dtype();
  const int n = dt.rank;
  auto bad = [&](const std::string& why) {
    return std::invalid_argument("no catalog row " + dt.name() + " size " +
                                 std::to_string(size) + " variant " +
                                 std::to_string(variant) + " k " + std::to_string(k) +
                                 " (" + why + "); valid rows:\n" + table_rows_help(dt));
  };
  if (dt.family == Family::A) {
    if (variant != 0 || k != 0) throw bad("type A has a single family");
    if (size < 1 || 2 * size - 1 > n) throw bad("size must satisfy 2*size-1 <= rank");
    OrthoSet seed;
    for (int i = 1; i <= 2 * size - 1; i += 2) {
      RootVec v(n, 0);
      v[i - 1] = 1;
      push_root(rs, seed, v);
    }
    return finish(rs, seed);
  }
  if (dt.family == Family::D) {
    if (variant == 1) {
      if (k != 0) throw bad("variant 1 takes no k");
      if (n % 2 != 0 || size != n / 2) throw bad("variant 1 requires even rank and size rank/2");
      OrthoSet seed;
      for (int i = 1; i <= n - 3; i += 2) {
        RootVec v(n, 0);
        v[i - 1] = 1;
        push_root(rs, seed, v);
      }
      RootVec v(n, 0);
      v[n - 1] = 1;
      push_root(rs, seed, v);
      return finish(rs, seed);
    }
    if (variant != 0) throw bad("type D variants are 0 and 1");
    int t = size - k;
    if (k < 0 || t < 1 || k > t) throw bad("k must satisfy 0 <= k <= size-k");
    if (2 * t > n) throw bad("size-k must satisfy 2*(size-k) <= rank");
    OrthoSet seed;
    for (int i = 1; i <= 2 * k - 1; i += 2) {
      RootVec v(n, 0);
      v[i - 1] = 1;
      push_root(rs, seed, v);  // alpha_i = eps_i - eps_{i+1}
      std::vector<int> eps(n, 0);
      eps[i - 1] = 1;
      eps[i] = 1;
      push_root(rs, seed, rs.eps_to_coeffs(eps));  // beta_i = eps_i + eps_{i+1}
    }
    for (int i = 2 * k + 1; i <= 2 * t - 1; i += 2) {
      RootVec v(n, 0);
      v[i - 1] = 1;
      push_root(rs, seed, v);
    }
    return finish(rs, seed);
  }
  if (k != 0) throw bad("type E takes no k");
  return seed_E(rs, size, variant);
}

std::string table_rows_help(const DiagramType& dt) {
  std::ostringstream os;
  const int n = dt.rank;
  if (dt.family == Family::A) {
    os << "  size t in 1.." << (n + 1) / 2 << ", variant 0\n";
  } else if (dt.family == Family::D) {
    os << "  variant 0: size s with k pairs, 0 <= k <= s-k and 2(s-k) <= " << n << "\n";
    if (n % 2 == 0) os << "  variant 1: size " << n / 2 << "\n";
  } else {
    os << "  sizes with a single family use variant 0; two families exist for\n";
    if (n == 7) os << "  E7 sizes 3 and 4 (variants 0 and 1)\n";
    if (n == 8) os << "  E8 size 4 (variants 0 and 1)\n";
    if (n == 6) os << "  E6 sizes are 1..4, variant 0\n";
    os << "  valid sizes: E6: 1..4, E7: 1..7, E8: 1..8\n";
  }
  return os.str();
}

std::string orbit_to_json(const OrbitData& orbit, bool admissible) {
  std::ostringstream os;
  os << "{\"diagram\": \"" << orbit.rs->dtype().name() << "\", \"seed\": [";
  for (size_t k = 0; k < orbit.seed.size(); ++k)
    os << (k ? ", " : "") << orbit.seed[k];
  os << "], \"size\": " << orbit.size()
     << ", \"admissible\": " << (admissible ? "true" : "false") << ", \"members\": [";
  for (int m = 0; m < orbit.size(); ++m) {
    if (m) os << ", ";
    os << '[';
    for (size_t k = 0; k < orbit.members[m].size(); ++k)
      os << (k ? ", " : "") << orbit.members[m][k];
    os << ']';
  }
  os << "], \"edges\": [";
  bool first = true;
  for (int m = 0; m < orbit.size(); ++m)
    for (int i = 1; i <= orbit.rs->rank(); ++i) {
      if (!first) os << ", ";
      first = false;
      os << "{\"node\": " << i << ", \"from\": " << m
         << ", \"to\": " << orbit.edge(m, i) << "}";
    }
  os << "]}";
  return os.str();
}

}  // namespace orthoposet
