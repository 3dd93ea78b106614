#include "orthoposet/weyl.hpp"

#include <stdexcept>

namespace orthoposet {

WeylElement::WeylElement(const RootSystem& rs) : rs_(&rs) {
  img_.resize(rs.rank());
  for (int i = 1; i <= rs.rank(); ++i) img_[i - 1] = rs.simple_root(i) + 1;
}

WeylElement WeylElement::generator(const RootSystem& rs, int node) {
  WeylElement w(rs);
  for (int i = 1; i <= rs.rank(); ++i)
    w.img_[i - 1] = rs.reflect_node(node, rs.simple_root(i) + 1);
  return w;
}

WeylElement WeylElement::from_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylElement w(rs);
  for (int letter : word) {
    // w := w * r_letter, i.e. (w r)(a_i) = w(r(a_i)).
    WeylElement next(rs);
    for (int i = 1; i <= rs.rank(); ++i)
      next.img_[i - 1] = w.apply(rs.reflect_node(letter, rs.simple_root(i) + 1));
    w = next;
  }
  return w;
}

SignedRoot WeylElement::apply(SignedRoot s) const {
  const RootSystem& rs = *rs_;
  const RootVec& v = rs.root(root_index(s));
  RootVec out(rs.rank(), 0);
  for (int i = 0; i < rs.rank(); ++i) {
    if (v[i] == 0) continue;
    SignedRoot t = img_[i];
    const RootVec& w = rs.root(root_index(t));
    int sign = t > 0 ? 1 : -1;
    for (int j = 0; j < rs.rank(); ++j) out[j] += v[i] * sign * w[j];
  }
  SignedRoot r = rs.lookup(out);
  if (r == 0) throw std::logic_error("Weyl image is not a root");
  return s > 0 ? r : -r;
}

WeylElement WeylElement::operator*(const WeylElement& other) const {
  WeylElement w(*rs_);
  for (size_t i = 0; i < img_.size(); ++i) w.img_[i] = apply(other.img_[i]);
  return w;
}

WeylElement WeylElement::inverse() const {
  // Invert the signed permutation induced on roots: if w(p) = +-q then
  // w^{-1}(q) = +-p, so the preimages of the simple roots can be read off.
  const RootSystem& rs = *rs_;
  WeylElement inv(rs);
  std::vector<SignedRoot> pre(rs.num_positive(), 0);
  for (int p = 0; p < rs.num_positive(); ++p) {
    SignedRoot t = apply(p + 1);
    pre[root_index(t)] = t > 0 ? p + 1 : -(p + 1);
  }
  for (int i = 1; i <= rs.rank(); ++i) inv.img_[i - 1] = pre[rs.simple_root(i)];
  return inv;
}

bool WeylElement::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != rs_->simple_root(static_cast<int>(i) + 1) + 1) return false;
  return true;
}

int WeylElement::length() const {
  int len = 0;
  for (int p = 0; p < rs_->num_positive(); ++p)
    if (apply(p + 1) < 0) ++len;
  return len;
}

bool WeylElement::right_descent(int node) const {
  return img_[node - 1] < 0;
}

bool WeylElement::left_descent(int node) const {
  return inverse().img_[node - 1] < 0;
}

}  // namespace orthoposet
