#include "orthoposet/hecke.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orthoposet {

PolyM PolyM::operator+(const PolyM& o) const {
  PolyM r;
  r.c.resize(std::max(c.size(), o.c.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
  r.normalize();
  return r;
}

PolyM PolyM::operator-(const PolyM& o) const { return *this + (-o); }

PolyM PolyM::operator-() const {
  PolyM r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

PolyM PolyM::operator*(const PolyM& o) const {
  if (is_zero() || o.is_zero()) return {};
  PolyM r;
  r.c.assign(c.size() + o.c.size() - 1, 0);
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
  r.normalize();
  return r;
}

std::string PolyM::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t d = 0; d < c.size(); ++d) {
    if (c[d] == 0) continue;
    long long v = c[d];
    if (!first) os << (v > 0 ? "+" : "-");
    else if (v < 0) os << "-";
    long long a = v < 0 ? -v : v;
    if (a != 1 || d == 0) os << a;
    if (d >= 1) {
      os << 'm';
      if (d >= 2) os << '^' << d;
    }
    first = false;
  }
  return os.str();
}

CoxSubsystem::CoxSubsystem(const RootSystem& rs, std::vector<int> c_nodes)
    : rs_(&rs), c_nodes_(std::move(c_nodes)) {
  std::sort(c_nodes_.begin(), c_nodes_.end());
  const int n = rs.rank();
  std::vector<char> in_c(n + 1, 0);
  for (int node : c_nodes_) in_c[node] = 1;
  amb_to_local_.assign(rs.num_positive(), -1);
  for (int k = 0; k < rs.num_positive(); ++k) {
    const RootVec& v = rs.root(k);
    bool supported = true;
    for (int i = 0; i < n; ++i)
      if (v[i] != 0 && !in_c[i + 1]) { supported = false; break; }
    if (!supported) continue;
    amb_to_local_[k] = static_cast<int>(local_roots_.size());
    local_roots_.push_back(k);
    std::vector<int> lc(c_nodes_.size());
    for (size_t g = 0; g < c_nodes_.size(); ++g) lc[g] = v[c_nodes_[g] - 1];
    local_coeffs_.push_back(std::move(lc));
  }
  local_simple_.resize(c_nodes_.size());
  for (size_t g = 0; g < c_nodes_.size(); ++g)
    local_simple_[g] = amb_to_local_[rs.simple_root(c_nodes_[g])];
  gen_refl_.assign(c_nodes_.size(), std::vector<int>(local_roots_.size()));
  for (size_t g = 0; g < c_nodes_.size(); ++g)
    for (size_t l = 0; l < local_roots_.size(); ++l) {
      SignedRoot s = rs.reflect_node(c_nodes_[g], local_roots_[l] + 1);
      int amb = root_index(s);
      int loc = amb_to_local_[amb];
      if (loc < 0) throw std::logic_error("parabolic subsystem not closed");
      gen_refl_[g][l] = s > 0 ? loc + 1 : -(loc + 1);
    }
}

int CoxSubsystem::gen_of_node(int node) const {
  auto it = std::lower_bound(c_nodes_.begin(), c_nodes_.end(), node);
  if (it == c_nodes_.end() || *it != node) return -1;
  return static_cast<int>(it - c_nodes_.begin());
}

GroupElement HeckeContext::identity() const {
  GroupElement e;
  e.img.resize(sub_.num_gens());
  for (int g = 0; g < sub_.num_gens(); ++g)
    e.img[g] = static_cast<int16_t>(sub_.local_simple(g) + 1);
  return e;
}

GroupElement HeckeContext::gen(int g) const {
  GroupElement w;
  w.img.resize(sub_.num_gens());
  for (int h = 0; h < sub_.num_gens(); ++h)
    w.img[h] = static_cast<int16_t>(sub_.reflect_gen(g, sub_.local_simple(h) + 1));
  return w;
}

int HeckeContext::apply(const GroupElement& a, int signed_local) const {
  int loc = (signed_local > 0 ? signed_local : -signed_local) - 1;
  const std::vector<int>& lc = sub_.local_coeffs(loc);
  const RootSystem& rs = sub_.ambient();
  RootVec out(rs.rank(), 0);
  for (int g = 0; g < sub_.num_gens(); ++g) {
    if (lc[g] == 0) continue;
    int t = a.img[g];
    int amb = sub_.ambient_of_local((t > 0 ? t : -t) - 1);
    const RootVec& w = rs.root(amb);
    int sign = (t > 0) ? lc[g] : -lc[g];
    for (int j = 0; j < rs.rank(); ++j) out[j] += sign * w[j];
  }
  SignedRoot s = rs.lookup(out);
  if (s == 0) throw std::logic_error("group image is not a root");
  int loc_img = sub_.local_of_ambient(root_index(s));
  if (loc_img < 0) throw std::logic_error("group image left the subsystem");
  int r = s > 0 ? loc_img + 1 : -(loc_img + 1);
  return signed_local > 0 ? r : -r;
}

GroupElement HeckeContext::mul(const GroupElement& a, const GroupElement& b) const {
  GroupElement r;
  r.img.resize(sub_.num_gens());
  for (int g = 0; g < sub_.num_gens(); ++g)
    r.img[g] = static_cast<int16_t>(apply(a, b.img[g]));
  return r;
}

GroupElement HeckeContext::inv(const GroupElement& a) const {
  std::vector<int> pre(sub_.num_positive(), 0);
  for (int l = 0; l < sub_.num_positive(); ++l) {
    int t = apply(a, l + 1);
    pre[(t > 0 ? t : -t) - 1] = t > 0 ? l + 1 : -(l + 1);
  }
  GroupElement r;
  r.img.resize(sub_.num_gens());
  for (int g = 0; g < sub_.num_gens(); ++g)
    r.img[g] = static_cast<int16_t>(pre[sub_.local_simple(g)]);
  return r;
}

int HeckeContext::length(const GroupElement& a) const {
  int len = 0;
  for (int l = 0; l < sub_.num_positive(); ++l)
    if (apply(a, l + 1) < 0) ++len;
  return len;
}

bool HeckeContext::left_descent(const GroupElement& a, int g) const {
  return inv(a).img[g] < 0;
}

std::vector<int> HeckeContext::reduced_word(GroupElement a) const {
  std::vector<int> rev;
  GroupElement e = identity();
  while (!(a == e)) {
    int g = -1;
    for (int h = 0; h < sub_.num_gens(); ++h)
      if (a.img[h] < 0) { g = h; break; }
    if (g < 0) throw std::logic_error("non-identity element with no descent");
    rev.push_back(g);
    a = mul(a, gen(g));
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

void HeckeElement::prune() {
  for (auto it = terms.begin(); it != terms.end();)
    it = it->second.is_zero() ? terms.erase(it) : std::next(it);
}

HeckeElement hecke_zero() { return {}; }

HeckeElement hecke_one(const HeckeContext& ctx) {
  HeckeElement r;
  r.terms.emplace(ctx.identity(), PolyM::one());
  return r;
}

HeckeElement hecke_gen(const HeckeContext& ctx, int node) {
  int g = ctx.sub().gen_of_node(node);
  if (g < 0)
    throw std::invalid_argument("node " + std::to_string(node) +
                                " is not orthogonal to the maximal member");
  HeckeElement r;
  r.terms.emplace(ctx.gen(g), PolyM::one());
  return r;
}

HeckeElement hecke_add(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement r = a;
  for (const auto& [w, p] : b.terms) {
    auto [it, fresh] = r.terms.emplace(w, p);
    if (!fresh) it->second = it->second + p;
  }
  r.prune();
  return r;
}

HeckeElement hecke_sub(const HeckeElement& a, const HeckeElement& b) {
  return hecke_add(a, hecke_scale(b, PolyM::constant(-1)));
}

HeckeElement hecke_scale(const HeckeElement& a, const PolyM& s) {
  HeckeElement r;
  if (s.is_zero()) return r;
  for (const auto& [w, p] : a.terms) r.terms.emplace(w, p * s);
  return r;
}

HeckeElement hecke_mul_gen_right(const HeckeContext& ctx, const HeckeElement& a, int g) {
  HeckeElement r;
  const PolyM neg_m = -PolyM::m();
  for (const auto& [w, p] : a.terms) {
    GroupElement ws = ctx.mul(w, ctx.gen(g));
    auto [it, fresh] = r.terms.emplace(ws, p);
    if (!fresh) it->second = it->second + p;
    if (ctx.right_descent(w, g)) {
      auto [it2, fresh2] = r.terms.emplace(w, p * neg_m);
      if (!fresh2) it2->second = it2->second + p * neg_m;
    }
  }
  r.prune();
  return r;
}

HeckeElement hecke_mul(const HeckeContext& ctx, const HeckeElement& a,
                       const HeckeElement& b) {
  HeckeElement result;
  for (const auto& [wb, q] : b.terms) {
    HeckeElement t = a;
    for (int g : ctx.reduced_word(wb)) t = hecke_mul_gen_right(ctx, t, g);
    result = hecke_add(result, hecke_scale(t, q));
  }
  return result;
}

int hecke_max_word_length(const HeckeContext& ctx, const HeckeElement& a) {
  int len = 0;
  for (const auto& [w, p] : a.terms) len = std::max(len, ctx.length(w));
  return len;
}

std::map<GroupElement, long long> hecke_at_m0(const HeckeElement& a) {
  std::map<GroupElement, long long> r;
  for (const auto& [w, p] : a.terms)
    if (p.at(0) != 0) r.emplace(w, p.at(0));
  return r;
}

std::string hecke_to_string(const HeckeContext& ctx, const HeckeElement& a) {
  if (a.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, p] : a.terms) {
    if (!first) os << " + ";
    os << '(' << p.str() << ") T[";
    std::vector<int> word = ctx.reduced_word(w);
    for (size_t k = 0; k < word.size(); ++k)
      os << (k ? " " : "") << ctx.sub().gen_node(word[k]);
    os << ']';
    first = false;
  }
  return os.str();
}

std::string hecke_to_json(const HeckeContext& ctx, const HeckeElement& a) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& [w, p] : a.terms) {
    if (!first) os << ", ";
    first = false;
    os << "{\"word\": [";
    std::vector<int> word = ctx.reduced_word(w);
    for (size_t k = 0; k < word.size(); ++k)
      os << (k ? ", " : "") << ctx.sub().gen_node(word[k]);
    os << "], \"poly\": [";
    for (size_t d = 0; d < p.c.size(); ++d) os << (d ? ", " : "") << p.c[d];
    os << "]}";
  }
  os << ']';
  return os.str();
}

std::pair<std::vector<int>, std::string> compute_C(const MonoidalPoset& p) {
  const std::vector<int>& nodes = p.c_nodes;
  std::vector<std::vector<int>> adj(nodes.size());
  for (size_t a = 0; a < nodes.size(); ++a)
    for (size_t b = 0; b < nodes.size(); ++b)
      if (a != b && p.rs->dtype().adjacent(nodes[a], nodes[b]))
        adj[a].push_back(static_cast<int>(b));
  return {nodes, classify_simply_laced(static_cast<int>(nodes.size()), adj)};
}

}  // namespace orthoposet
