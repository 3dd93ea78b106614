#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "orthoposet/diagram.hpp"

namespace orthoposet {

/// A root is stored as its integer coefficient vector over the simple roots
/// alpha_1..alpha_n of the ambient diagram, in all families. The orthonormal
/// epsilon coordinates classically used for types A and D are provided only
/// as a display/input conversion (eps_form).
using RootVec = std::vector<int>;

/// Signed index of a root: s = idx+1 for the positive root with index idx,
/// s = -(idx+1) for its negative. 0 means "not a root".
using SignedRoot = int;

inline int root_index(SignedRoot s) { return (s > 0 ? s : -s) - 1; }
inline bool root_positive(SignedRoot s) { return s > 0; }

/// The positive root system of a connected simply laced diagram, with exact
/// integer arithmetic throughout. Immutable after construction and safe for
/// concurrent read-only use.
///
/// Positive roots are indexed 0..num_positive()-1 in canonical order:
/// ascending height, then ascending lexicographic coefficient vector.
class RootSystem {
 public:
  /// Builds the full positive system by breadth-first closure of the simple
  /// roots under the simple reflections, then precomputes reflection and
  /// inner-product tables.
  static RootSystem build(DiagramType dtype);

  const DiagramType& dtype() const { return dtype_; }
  int rank() const { return dtype_.rank; }
  int num_positive() const { return static_cast<int>(roots_.size()); }

  const RootVec& root(int idx) const { return roots_[idx]; }
  int height(int idx) const { return heights_[idx]; }
  static int height_of(const RootVec& v);

  /// Index of the simple root alpha_i (node is 1-based).
  int simple_root(int node) const { return simple_idx_[node - 1]; }

  /// Bilinear form values; the self inner product of any root is 2.
  int inner(int a_idx, int b_idx) const { return inner_tab_[a_idx][b_idx]; }
  int inner_vec(const RootVec& a, const RootVec& b) const;

  /// Image of a root under the simple reflection r_i (node 1-based).
  SignedRoot reflect_node(int node, SignedRoot s) const {
    SignedRoot t = node_refl_[node - 1][root_index(s)];
    return s > 0 ? t : -t;
  }

  /// Image of a root under the reflection with positive root delta_idx.
  SignedRoot reflect_root(int delta_idx, SignedRoot s) const {
    SignedRoot t = root_refl_[delta_idx][root_index(s)];
    return s > 0 ? t : -t;
  }

  /// Raw lattice reflection r - (delta, r) * delta. No root validation is
  /// performed on either argument or on the result; callers that need roots
  /// must validate via lookup().
  RootVec reflect_general(const RootVec& delta, const RootVec& r) const;

  /// Signed index of a coefficient vector, or 0 if it is not a root.
  SignedRoot lookup(const RootVec& v) const;

  /// Epsilon-coordinate form, defined for families A (length rank+1, the
  /// root eps_i - eps_j) and D (length rank, eps_i -+ eps_j). Throws for E.
  std::vector<int> eps_form(int idx) const;

  /// Inverse of eps_form: converts an epsilon-coordinate vector to the
  /// simple-root coefficient vector. Throws if the vector is not in the
  /// root lattice of the family.
  RootVec eps_to_coeffs(const std::vector<int>& eps) const;

  /// Compact display, e.g. "a2+a3+2a4+a5"; for A and D the epsilon form
  /// "e1-e3" / "e2+e5" is used.
  std::string root_repr(int idx) const;

  /// JSON text: {"type": "...", "positive_roots": [[coeffs...], ...]}.
  std::string to_json() const;

 private:
  DiagramType dtype_;
  std::vector<RootVec> roots_;
  std::vector<int> heights_;
  std::vector<int> simple_idx_;
  std::vector<int> gram_;  // rank x rank, row-major
  std::vector<std::vector<SignedRoot>> node_refl_;
  std::vector<std::vector<SignedRoot>> root_refl_;
  std::vector<std::vector<signed char>> inner_tab_;

  struct VecHash {
    size_t operator()(const RootVec& v) const {
      size_t h = 1469598103934665603ull;
      for (int x : v) {
        h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
      }
      return h;
    }
  };
  std::unordered_map<RootVec, int, VecHash> index_;

  int gram(int i, int j) const { return gram_[i * dtype_.rank + j]; }
};

}  // namespace orthoposet
