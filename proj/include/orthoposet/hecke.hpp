#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "orthoposet/poset.hpp"
#include "orthoposet/root_system.hpp"

namespace orthoposet {

/// Polynomial in the indeterminate m with exact integer coefficients,
/// stored densely by degree and kept free of trailing zeros.
struct PolyM {
  std::vector<long long> c;

  static PolyM zero() { return {}; }
  static PolyM one() { return PolyM{{1}}; }
  static PolyM m() { return PolyM{{0, 1}}; }
  static PolyM constant(long long v) { return v ? PolyM{{v}} : PolyM{}; }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  long long at(int d) const { return d < static_cast<int>(c.size()) ? c[d] : 0; }

  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  PolyM operator+(const PolyM& o) const;
  PolyM operator-(const PolyM& o) const;
  PolyM operator*(const PolyM& o) const;
  PolyM operator-() const;
  bool operator==(const PolyM& o) const { return c == o.c; }

  std::string str() const;
};

/// The parabolic root subsystem on a set C of diagram nodes: its positive
/// roots are the ambient positive roots supported on C, and its simple
/// roots are the alpha_j for j in C.
class CoxSubsystem {
 public:
  CoxSubsystem(const RootSystem& rs, std::vector<int> c_nodes);

  const RootSystem& ambient() const { return *rs_; }
  const std::vector<int>& nodes() const { return c_nodes_; }
  int num_gens() const { return static_cast<int>(c_nodes_.size()); }
  int num_positive() const { return static_cast<int>(local_roots_.size()); }

  int gen_node(int g) const { return c_nodes_[g]; }
  /// Generator index of an ambient node label, or -1.
  int gen_of_node(int node) const;
  int ambient_of_local(int loc) const { return local_roots_[loc]; }
  int local_of_ambient(int amb) const { return amb_to_local_[amb]; }

  /// Coefficients of a local positive root over the simple roots of C.
  const std::vector<int>& local_coeffs(int loc) const { return local_coeffs_[loc]; }

  /// Image of a local root under the generator reflection (signed local).
  int reflect_gen(int g, int signed_local) const {
    int t = gen_refl_[g][(signed_local > 0 ? signed_local : -signed_local) - 1];
    return signed_local > 0 ? t : -t;
  }

  int local_simple(int g) const { return local_simple_[g]; }

 private:
  const RootSystem* rs_;
  std::vector<int> c_nodes_;
  std::vector<int> local_roots_;   // local -> ambient positive index
  std::vector<int> amb_to_local_;  // ambient positive index -> local or -1
  std::vector<std::vector<int>> local_coeffs_;
  std::vector<std::vector<int>> gen_refl_;
  std::vector<int> local_simple_;
};

/// An element of the Coxeter group W(C) in canonical form: the tuple of
/// images of the simple roots of C (signed local root indices). The
/// reflection representation is faithful, so this determines the element.
struct GroupElement {
  std::vector<int16_t> img;

  bool operator==(const GroupElement& o) const { return img == o.img; }
  bool operator<(const GroupElement& o) const { return img < o.img; }
};

/// Group arithmetic for W(C) plus the length/descent machinery needed by
/// the Hecke multiplication.
class HeckeContext {
 public:
  HeckeContext(const RootSystem& rs, std::vector<int> c_nodes)
      : sub_(rs, std::move(c_nodes)) {}

  const CoxSubsystem& sub() const { return sub_; }

  GroupElement identity() const;
  GroupElement gen(int g) const;
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inv(const GroupElement& a) const;

  /// Image of a local root under the element.
  int apply(const GroupElement& a, int signed_local) const;

  /// Number of positive roots of C sent to negative roots.
  int length(const GroupElement& a) const;

  /// l(w s_g) < l(w), i.e. w(alpha_g) is negative.
  bool right_descent(const GroupElement& a, int g) const { return a.img[g] < 0; }
  /// l(s_g w) < l(w), i.e. w^{-1}(alpha_g) is negative.
  bool left_descent(const GroupElement& a, int g) const;

  /// Reduced word (generator indices), extracted by repeatedly removing the
  /// lowest right descent.
  std::vector<int> reduced_word(GroupElement a) const;

 private:
  CoxSubsystem sub_;
};

/// Element of the Hecke algebra Z of type C over Z[m], as a finite map from
/// group elements to polynomial coefficients. The generators satisfy
/// T_s^2 = 1 - m T_s.
struct HeckeElement {
  std::map<GroupElement, PolyM> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const HeckeElement& o) const { return terms == o.terms; }

  void prune();
};

HeckeElement hecke_zero();
HeckeElement hecke_one(const HeckeContext& ctx);
/// T_{s_j} for an ambient node label j; throws if j is not in C.
HeckeElement hecke_gen(const HeckeContext& ctx, int node);
HeckeElement hecke_add(const HeckeElement& a, const HeckeElement& b);
HeckeElement hecke_sub(const HeckeElement& a, const HeckeElement& b);
HeckeElement hecke_scale(const HeckeElement& a, const PolyM& s);
/// a * T_{s_g}: T_w T_s = T_{ws} if l(ws) > l(w), else T_{ws} - m T_w.
HeckeElement hecke_mul_gen_right(const HeckeContext& ctx, const HeckeElement& a, int g);
HeckeElement hecke_mul(const HeckeContext& ctx, const HeckeElement& a,
                       const HeckeElement& b);

/// Maximum word length over the stored basis elements (0 for scalars).
int hecke_max_word_length(const HeckeContext& ctx, const HeckeElement& a);

/// Specialization m -> 0, which must recover group-algebra arithmetic.
std::map<GroupElement, long long> hecke_at_m0(const HeckeElement& a);

/// Rendering: sum of "(poly) T[j1 j2 ...]" with ambient node labels.
std::string hecke_to_string(const HeckeContext& ctx, const HeckeElement& a);
/// JSON: [{"word": [nodes...], "poly": [c0, c1, ...]}, ...].
std::string hecke_to_json(const HeckeContext& ctx, const HeckeElement& a);

/// The node set orthogonal to B0 together with the canonical name of its
/// induced diagram type.
std::pair<std::vector<int>, std::string> compute_C(const MonoidalPoset& p);

}  // namespace orthoposet
