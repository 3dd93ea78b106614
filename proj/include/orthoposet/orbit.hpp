#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "orthoposet/root_system.hpp"

namespace orthoposet {

/// A set of mutually orthogonal positive roots in canonical form: the
/// strictly increasing list of positive-root indices.
using OrthoSet = std::vector<int>;

struct OrthoSetHash {
  size_t operator()(const OrthoSet& v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Throws unless all indices are valid, strictly increasing, and the member
/// roots are pairwise orthogonal.
void validate_orthoset(const RootSystem& rs, const OrthoSet& b);

/// Set-level action of the simple reflection r_i: each member root is
/// reflected and negative images are replaced by their negation, so the
/// result is again a set of positive roots of the same cardinality.
/// In particular act_node(i, {alpha_i}) = {alpha_i}.
OrthoSet act_node(const RootSystem& rs, int node, const OrthoSet& b);

/// Same action for the reflection whose positive root has index delta_idx.
OrthoSet act_reflection(const RootSystem& rs, int delta_idx, const OrthoSet& b);

/// |r_delta B \ B|.
int moved_count(const RootSystem& rs, int delta_idx, const OrthoSet& b);

/// Nodes i with alpha_i orthogonal to every member of B and alpha_i not in
/// B itself (1-based).
std::vector<int> orthogonal_nodes(const RootSystem& rs, const OrthoSet& b);

/// Given two mutually orthogonal positive roots beta, gamma both moved by
/// the reflection r with positive root delta_r, returns the positive root
/// delta of a reflection s commuting with r such that {beta} = rs{gamma}:
///   (beta,d)= 1, (gamma,d)= 1  ->  beta+gamma-delta_r
///   (beta,d)= 1, (gamma,d)=-1  ->  beta-gamma-delta_r
///   (beta,d)=-1, (gamma,d)= 1  ->  beta-gamma+delta_r
///   (beta,d)=-1, (gamma,d)=-1  ->  beta+gamma+delta_r
/// normalized to a positive root. Throws if the preconditions fail.
int other_reflection(const RootSystem& rs, int delta_r_idx, int beta_idx, int gamma_idx);

/// A complete W-orbit of an OrthoSet, closed under all simple reflections,
/// with the full edge table. Members are indexed in discovery order of the
/// breadth-first closure from the seed, nodes tried in ascending order.
struct OrbitData {
  const RootSystem* rs = nullptr;
  OrthoSet seed;
  std::vector<OrthoSet> members;
  std::unordered_map<OrthoSet, int, OrthoSetHash> index_of;
  /// edges[m][i-1] = member index of r_i(members[m]); equal to m iff r_i
  /// fixes the set (either alpha_i in B or alpha_i in B-perp).
  std::vector<std::vector<int32_t>> edges;

  int size() const { return static_cast<int>(members.size()); }
  int edge(int member, int node) const { return edges[member][node - 1]; }
};

/// Breadth-first closure of the seed under the fundamental reflections.
/// max_members is a guard against pathological sizes.
OrbitData enumerate_orbit(const RootSystem& rs, const OrthoSet& seed,
                          size_t max_members = 8u << 20);

/// Admissibility per the defining condition: for each member B and each
/// non-adjacent node pair i,j such that gamma and gamma - alpha_i + alpha_j
/// both lie in B, the sets r_iB and r_jB coincide.
bool is_admissible_def(const OrbitData& orbit);

/// Admissibility via moved-root counts: for every member B and every
/// reflection r of W, |rB \ B| is one of 0, 1, 2, 4. Agrees with
/// is_admissible_def on every orbit.
bool is_admissible_moves(const OrbitData& orbit);

/// Like the two predicates above but on a single set: a violation witnessed
/// at any member already decides the whole orbit, since both conditions are
/// W-invariant. Returns a human-readable witness, or nullopt if the set
/// passes. Used to classify very large orbits without full enumeration.
std::optional<std::string> def_violation_at(const RootSystem& rs, const OrthoSet& b);
std::optional<std::string> moves_violation_at(const RootSystem& rs, const OrthoSet& b);

/// Seed sets of the orbit catalog, translated to root indices.
/// For family A: variant 0, size t, the set {a1, a3, ..., a(2t-1)}.
/// For family D: variant 0 is the family of k pairs {eps_i -+ eps_{i+1}}
/// plus size-k.. singleton tails: {alpha_i, beta_i | i = 1,3,..,2k-1} union
/// {alpha_i | i = 2k+1, ..., 2(size-k)-1} where beta_i = eps_i + eps_{i+1};
/// variant 1 (n even, size n/2) is {alpha_1, alpha_3, ..., alpha_{n-3}, alpha_n}.
/// For families E6/E7/E8 the literal sets of the catalog, with variant
/// distinguishing the two size-3 / size-4 families where both exist.
/// Throws with a list of valid rows for unknown (dtype, size, variant, k).
OrthoSet seed_from_table(const RootSystem& rs, int size, int variant, int k = 0);

/// Valid (size, variant) rows for a diagram, for error messages.
std::string table_rows_help(const DiagramType& dtype);

/// JSON orbit dump:
/// {"diagram": ..., "seed": [...], "size": N, "admissible": bool,
///  "members": [[root ids]...], "edges": [{"node": i, "from": a, "to": b}...]}
std::string orbit_to_json(const OrbitData& orbit, bool admissible);

}  // namespace orthoposet
