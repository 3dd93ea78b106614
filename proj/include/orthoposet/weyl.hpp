#pragma once

#include <vector>

#include "orthoposet/root_system.hpp"

namespace orthoposet {

/// An element of the ambient Weyl group, represented by the images of the
/// simple roots. The representation is faithful, so the image tuple is a
/// canonical form with O(1) equality.
class WeylElement {
 public:
  explicit WeylElement(const RootSystem& rs);

  static WeylElement identity(const RootSystem& rs) { return WeylElement(rs); }
  static WeylElement generator(const RootSystem& rs, int node);
  /// Product r_{w[0]} r_{w[1]} ... of fundamental reflections.
  static WeylElement from_word(const RootSystem& rs, const std::vector<int>& word);

  /// Image of a root.
  SignedRoot apply(SignedRoot s) const;

  WeylElement operator*(const WeylElement& other) const;
  WeylElement inverse() const;

  bool operator==(const WeylElement& o) const { return img_ == o.img_; }

  bool is_identity() const;

  /// Number of positive roots sent to negative roots.
  int length() const;

  /// l(w r_node) < l(w), i.e. w(alpha_node) is negative.
  bool right_descent(int node) const;
  /// l(r_node w) < l(w), i.e. w^{-1}(alpha_node) is negative.
  bool left_descent(int node) const;

  const std::vector<SignedRoot>& images() const { return img_; }

 private:
  const RootSystem* rs_;
  std::vector<SignedRoot> img_;  // img_[i-1] = image of alpha_i
};

}  // namespace orthoposet
