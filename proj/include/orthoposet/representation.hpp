#pragma once

#include <map>
#include <string>
#include <vector>

#include "orthoposet/h_elements.hpp"
#include "orthoposet/hecke.hpp"
#include "orthoposet/poset.hpp"

namespace orthoposet {

/// Element of the free right Z-module V with basis x_B: a finite map from
/// member indices to Hecke-algebra coefficients, acting scalars on the
/// right. Zero terms are never stored.
struct RepVector {
  std::map<int, HeckeElement> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const RepVector& o) const { return terms == o.terms; }

  void add(int member, HeckeElement coeff);
};

RepVector rep_basis(const HeckeContext& ctx, int member);
/// v * z (right scalar action on every coefficient).
RepVector rep_scale(const HeckeContext& ctx, const RepVector& v, const HeckeElement& z);

/// The action of the fundamental monoid generator on V:
///   tau_i x_B = 0                    if alpha_i in B,
///               x_B h(B,i)           if alpha_i in B-perp,
///               x_{r_iB}             if r_iB < B,
///               x_{r_iB} - m x_B     if r_iB > B,
/// extended right-linearly.
RepVector tau(const MonoidalPoset& p, const HTable& ht, const HeckeContext& ctx,
              int node, const RepVector& v);

/// Applies the letters right to left: tau_word({i,j}, v) = tau_i(tau_j(v)).
RepVector tau_word(const MonoidalPoset& p, const HTable& ht, const HeckeContext& ctx,
                   const std::vector<int>& word, const RepVector& v);

struct BraidFailure {
  int i = 0, j = 0, member = 0;
  std::string lhs, rhs;
};

struct RepReport {
  long long pairs_checked = 0;
  std::vector<BraidFailure> failures;  // capped at 32
  long long failure_count = 0;
  int max_coeff_degree = 0;
  int max_word_length = 0;

  bool pass() const { return failure_count == 0; }
};

/// Exhaustive braid-relation verification: for every node pair (i, j) and
/// every basis member B, checks tau_i tau_j x_B = tau_j tau_i x_B when i, j
/// are non-adjacent and tau_i tau_j tau_i x_B = tau_j tau_i tau_j x_B when
/// adjacent, by exact equality over Z[m]. Also monitors the maximum
/// coefficient degree and T-word length encountered.
RepReport verify_braid(const MonoidalPoset& p, const HTable& ht, const HeckeContext& ctx,
                       int jobs = 1);

/// Sparse matrix of tau_i over Z: column B holds the coefficients of
/// tau_i x_B (at most 2 nonzero entries).
struct GeneratorMatrix {
  int node = 0;
  std::vector<std::vector<std::pair<int, HeckeElement>>> columns;
};

GeneratorMatrix matrix_of_generator(const MonoidalPoset& p, const HTable& ht,
                                    const HeckeContext& ctx, int node);

/// Matrix product with coefficient products taken left-to-right, matching
/// composition of the corresponding actions.
GeneratorMatrix matrix_mul(const HeckeContext& ctx, const GeneratorMatrix& a,
                           const GeneratorMatrix& b);

/// JSON dump of all generator matrices.
std::string matrices_to_json(const MonoidalPoset& p, const HTable& ht,
                              const HeckeContext& ctx);

std::string rep_report_summary(const MonoidalPoset& p, const RepReport& rep);

}  // namespace orthoposet
