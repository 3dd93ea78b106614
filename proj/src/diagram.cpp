#include "orthoposet/diagram.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace orthoposet {

DiagramType DiagramType::parse(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("unsupported diagram: " + name);
  char fam = name[0];
  if (fam != 'A' && fam != 'D' && fam != 'E')
    throw std::invalid_argument("unsupported diagram: " + name);
  int rank = 0;
  for (size_t k = 1; k < name.size(); ++k) {
    if (name[k] < '0' || name[k] > '9')
      throw std::invalid_argument("unsupported diagram: " + name);
    rank = rank * 10 + (name[k] - '0');
  }
  DiagramType t{static_cast<Family>(fam), rank};
  if (!t.valid()) throw std::invalid_argument("unsupported diagram: " + name);
  return t;
}

std::string DiagramType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

bool DiagramType::valid() const {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
  }
  return false;
}

int DiagramType::positive_root_count() const {
  switch (family) {
    case Family::A: return rank * (rank + 1) / 2;
    case Family::D: return rank * (rank - 1);
    case Family::E: return rank == 6 ? 36 : rank == 7 ? 63 : 120;
  }
  return 0;
}

long long DiagramType::weyl_order() const {
  auto fact = [](int m) {
    long long r = 1;
    for (int k = 2; k <= m; ++k) r *= k;
    return r;
  };
  switch (family) {
    case Family::A: return fact(rank + 1);
    case Family::D: return (1LL << (rank - 1)) * fact(rank);
    case Family::E: return rank == 6 ? 51840LL : rank == 7 ? 2903040LL : 696729600LL;
  }
  return 0;
}

std::vector<std::pair<int, int>> DiagramType::edges() const {
  std::vector<std::pair<int, int>> e;
  switch (family) {
    case Family::A:
      for (int i = 1; i < rank; ++i) e.emplace_back(i, i + 1);
      break;
    case Family::D:
      for (int i = 1; i <= rank - 2; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(rank - 2, rank);
      break;
    case Family::E:
      e.emplace_back(1, 3);
      e.emplace_back(3, 4);
      e.emplace_back(2, 4);
      for (int i = 4; i < rank; ++i) e.emplace_back(i, i + 1);
      break;
  }
  return e;
}

bool DiagramType::adjacent(int i, int j) const {
  if (i > j) std::swap(i, j);
  switch (family) {
    case Family::A: return j == i + 1;
    case Family::D: return (j == i + 1 && i <= rank - 2) || (i == rank - 2 && j == rank);
    case Family::E:
      if (i == 1 && j == 3) return true;
      if (i == 2 && j == 4) return true;
      if (i == 3 && j == 4) return true;
      return i >= 4 && j == i + 1;
  }
  return false;
}

namespace {

// Identifies one connected simply laced component from its node degrees.
// Paths are A_n; a single degree-3 node with branch lengths (1,1,c) is
// D_{c+3}; branch lengths (1,2,c) with c in {2,3,4} are E6/E7/E8.
std::pair<char, int> classify_component(const std::vector<int>& nodes,
                                        const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(nodes.size());
  if (n == 1) return {'A', 1};
  int fork = -1;
  for (int v : nodes) {
    size_t d = adj[v].size();
    if (d > 3) throw std::invalid_argument("not a simply laced spherical diagram");
    if (d == 3) {
      if (fork >= 0) throw std::invalid_argument("not a simply laced spherical diagram");
      fork = v;
    }
  }
  if (fork < 0) return {'A', n};
  std::vector<int> branch_len;
  for (int s : adj[fork]) {
    int len = 1, prev = fork, cur = s;
    while (true) {
      const auto& nb = adj[cur];
      if (nb.size() == 1) break;
      int next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
      ++len;
    }
    branch_len.push_back(len);
  }
  std::sort(branch_len.begin(), branch_len.end());
  if (branch_len[0] == 1 && branch_len[1] == 1) return {'D', branch_len[2] + 3};
  if (branch_len[0] == 1 && branch_len[1] == 2 && branch_len[2] >= 2 && branch_len[2] <= 4)
    return {'E', branch_len[2] + 4};
  throw std::invalid_argument("not a simply laced spherical diagram");
}

}  // namespace

std::string classify_simply_laced(int node_count,
                                  const std::vector<std::vector<int>>& adj) {
  std::vector<int> comp(node_count, -1);
  std::vector<std::pair<char, int>> parts;
  for (int v = 0; v < node_count; ++v) {
    if (comp[v] >= 0) continue;
    std::vector<int> nodes{v};
    comp[v] = v;
    for (size_t h = 0; h < nodes.size(); ++h)
      for (int w : adj[nodes[h]])
        if (comp[w] < 0) {
          comp[w] = v;
          nodes.push_back(w);
        }
    auto [fam, rank] = classify_component(nodes, adj);
    // Normalize degenerate D types to their A equivalents.
    if (fam == 'D' && rank == 2) {
      parts.emplace_back('A', 1);
      parts.emplace_back('A', 1);
      continue;
    }
    if (fam == 'D' && rank == 3) {
      parts.emplace_back('A', 3);
      continue;
    }
    parts.emplace_back(fam, rank);
  }
  if (parts.empty()) return "empty";
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (size_t k = 0; k < parts.size(); ++k) {
    if (k) out += '+';
    out += parts[k].first;
    out += std::to_string(parts[k].second);
  }
  return out;
}

}  // namespace orthoposet
