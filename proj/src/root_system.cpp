#include "orthoposet/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace orthoposet {

int RootSystem::height_of(const RootVec& v) {
  return std::accumulate(v.begin(), v.end(), 0);
}

int RootSystem::inner_vec(const RootVec& a, const RootVec& b) const {
  const int n = dtype_.rank;
  int s = 0;
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j) s += a[i] * gram(i, j) * b[j];
  }
  return s;
}

RootVec RootSystem::reflect_general(const RootVec& delta, const RootVec& r) const {
  int c = inner_vec(delta, r);
  RootVec out = r;
  for (int i = 0; i < dtype_.rank; ++i) out[i] -= c * delta[i];
  return out;
}

SignedRoot RootSystem::lookup(const RootVec& v) const {
  auto it = index_.find(v);
  if (it != index_.end()) return it->second + 1;
  RootVec neg(v.size());
  for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
  it = index_.find(neg);
  if (it != index_.end()) return -(it->second + 1);
  return 0;
}

RootSystem RootSystem::build(DiagramType dtype) {
  if (!dtype.valid()) throw std::invalid_argument("unsupported diagram: " + dtype.name());
  RootSystem rs;
  rs.dtype_ = dtype;
  const int n = dtype.rank;

  rs.gram_.assign(n * n, 0);
  for (int i = 0; i < n; ++i) rs.gram_[i * n + i] = 2;
  for (auto [a, b] : dtype.edges()) {
    rs.gram_[(a - 1) * n + (b - 1)] = -1;
    rs.gram_[(b - 1) * n + (a - 1)] = -1;
  }

  // Breadth-first closure under simple reflections, starting from the
  // simple roots; every positive root is reached since each one descends
  // to a simple root through positive roots.
  std::unordered_map<RootVec, int, VecHash> seen;
  std::vector<RootVec> queue;
  for (int i = 0; i < n; ++i) {
    RootVec a(n, 0);
    a[i] = 1;
    seen.emplace(a, 0);
    queue.push_back(a);
  }
  for (size_t h = 0; h < queue.size(); ++h) {
    RootVec cur = queue[h];
    for (int i = 0; i < n; ++i) {
      int c = 0;
      for (int j = 0; j < n; ++j) c += rs.gram_[i * n + j] * cur[j];
      RootVec img = cur;
      img[i] -= c;
      bool positive = true;
      for (int x : img)
        if (x < 0) { positive = false; break; }
      if (positive && !seen.count(img)) {
        seen.emplace(img, 0);
        queue.push_back(img);
      }
    }
  }

  rs.roots_ = std::move(queue);
  std::sort(rs.roots_.begin(), rs.roots_.end(), [](const RootVec& a, const RootVec& b) {
    int ha = height_of(a), hb = height_of(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  const int npos = static_cast<int>(rs.roots_.size());
  if (npos != dtype.positive_root_count())
    throw std::logic_error("positive root count mismatch for " + dtype.name());

  rs.heights_.resize(npos);
  for (int k = 0; k < npos; ++k) {
    rs.heights_[k] = height_of(rs.roots_[k]);
    rs.index_.emplace(rs.roots_[k], k);
  }
  rs.simple_idx_.resize(n);
  for (int i = 0; i < n; ++i) {
    RootVec a(n, 0);
    a[i] = 1;
    rs.simple_idx_[i] = rs.index_.at(a);
  }

  rs.inner_tab_.assign(npos, std::vector<signed char>(npos, 0));
  for (int a = 0; a < npos; ++a)
    for (int b = a; b < npos; ++b) {
      int v = rs.inner_vec(rs.roots_[a], rs.roots_[b]);
      rs.inner_tab_[a][b] = static_cast<signed char>(v);
      rs.inner_tab_[b][a] = static_cast<signed char>(v);
    }

  rs.node_refl_.assign(n, std::vector<SignedRoot>(npos, 0));
  for (int i = 0; i < n; ++i) {
    const RootVec& alpha = rs.roots_[rs.simple_idx_[i]];
    for (int k = 0; k < npos; ++k) {
      RootVec img = rs.reflect_general(alpha, rs.roots_[k]);
      SignedRoot s = rs.lookup(img);
      if (s == 0) throw std::logic_error("reflection left the root system");
      rs.node_refl_[i][k] = s;
    }
  }
  rs.root_refl_.assign(npos, std::vector<SignedRoot>(npos, 0));
  for (int d = 0; d < npos; ++d)
    for (int k = 0; k < npos; ++k) {
      int c = rs.inner_tab_[d][k];
      if (c == 0) {
        rs.root_refl_[d][k] = k + 1;
        continue;
      }
      RootVec img = rs.roots_[k];
      for (int i = 0; i < n; ++i) img[i] -= c * rs.roots_[d][i];
      SignedRoot s = rs.lookup(img);
      if (s == 0) throw std::logic_error("reflection left the root system");
      rs.root_refl_[d][k] = s;
    }
  return rs;
}

std::vector<int> RootSystem::eps_form(int idx) const {
  const int n = dtype_.rank;
  const RootVec& a = roots_[idx];
  if (dtype_.family == Family::A) {
    std::vector<int> e(n + 1, 0);
    // alpha_i = eps_i - eps_{i+1}
    for (int i = 0; i < n; ++i) {
      e[i] += a[i];
      e[i + 1] -= a[i];
    }
    return e;
  }
  if (dtype_.family == Family::D) {
    std::vector<int> e(n, 0);
    // alpha_i = eps_i - eps_{i+1} (i < n), alpha_n = eps_{n-1} + eps_n
    for (int i = 0; i < n - 1; ++i) {
      e[i] += a[i];
      e[i + 1] -= a[i];
    }
    e[n - 2] += a[n - 1];
    e[n - 1] += a[n - 1];
    return e;
  }
  throw std::invalid_argument("epsilon coordinates are defined for types A and D only");
}

RootVec RootSystem::eps_to_coeffs(const std::vector<int>& eps) const {
  const int n = dtype_.rank;
  if (dtype_.family == Family::A) {
    if (static_cast<int>(eps.size()) != n + 1)
      throw std::invalid_argument("epsilon vector must have length rank+1 for type A");
    if (std::accumulate(eps.begin(), eps.end(), 0) != 0)
      throw std::invalid_argument("not in the type A root lattice");
    RootVec a(n);
    int acc = 0;
    for (int i = 0; i < n; ++i) {
      acc += eps[i];
      a[i] = acc;
    }
    return a;
  }
  if (dtype_.family == Family::D) {
    if (static_cast<int>(eps.size()) != n)
      throw std::invalid_argument("epsilon vector must have length rank for type D");
    RootVec a(n);
    int acc = 0;
    for (int i = 0; i < n - 2; ++i) {
      acc += eps[i];
      a[i] = acc;
    }
    int s = acc + eps[n - 2];  // sum of first n-1 entries
    if ((s + eps[n - 1]) % 2 != 0)
      throw std::invalid_argument("not in the type D root lattice");
    a[n - 1] = (s + eps[n - 1]) / 2;
    a[n - 2] = (s - eps[n - 1]) / 2;
    return a;
  }
  throw std::invalid_argument("epsilon coordinates are defined for types A and D only");
}

std::string RootSystem::root_repr(int idx) const {
  std::ostringstream os;
  if (dtype_.family != Family::E) {
    std::vector<int> e = eps_form(idx);
    bool first = true;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] > 0 && !first) os << '+';
      if (e[i] < 0) os << '-';
      os << 'e' << (i + 1);
      first = false;
    }
    return os.str();
  }
  const RootVec& a = roots_[idx];
  bool first = true;
  for (int i = 0; i < dtype_.rank; ++i) {
    if (a[i] == 0) continue;
    if (!first) os << '+';
    if (a[i] != 1) os << a[i];
    os << 'a' << (i + 1);
    first = false;
  }
  return os.str();
}

std::string RootSystem::to_json() const {
  std::ostringstream os;
  os << "{\"type\": \"" << dtype_.name() << "\", \"positive_roots\": [";
  for (size_t k = 0; k < roots_.size(); ++k) {
    if (k) os << ", ";
    os << '[';
    for (size_t i = 0; i < roots_[k].size(); ++i) {
      if (i) os << ", ";
      os << roots_[k][i];
    }
    os << ']';
  }
  os << "]}";
  return os.str();
}

}  // namespace orthoposet
