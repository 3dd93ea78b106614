#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orthoposet/orbit.hpp"

namespace orthoposet {

/// Classification of the action of a fundamental reflection on a member of
/// an admissible orbit. Raises/Lowers occur exactly when alpha_i lies
/// neither in B nor in B-perp.
enum class EdgeClass : uint8_t { FixesInB, FixesPerp, Raises, Lowers };

enum class Ordering : uint8_t { Less, Greater, Equal, Incomparable };

const char* to_string(EdgeClass c);

/// Minimal-height comparison rule: B < C iff the minimal height in B\C is
/// smaller than the minimal height in C\B. Incomparable when the minimal
/// heights tie (never between B and r_iB on an admissible orbit).
Ordering compare_sets(const RootSystem& rs, const OrthoSet& b, const OrthoSet& c);

/// Classifies the edge (B, r_iB). Throws on Incomparable, which would
/// violate the order properties of an admissible orbit.
EdgeClass classify_edge(const RootSystem& rs, int node, const OrthoSet& b);

/// The monoidal poset on an admissible orbit: the order generated by the
/// raising edges (B, r_jB), with unique maximal element B0, level function
/// (breadth-first distance from B0 along lowering steps) and the node set C
/// orthogonal to B0.
struct MonoidalPoset {
  const RootSystem* rs = nullptr;
  OrbitData orbit;
  std::vector<std::vector<EdgeClass>> edge_class;  // [member][node-1]
  int b0 = -1;
  std::vector<int> level;
  /// Lowest raising node of each member (-1 for B0); defines the canonical
  /// level-tree parent edge(member, parent_node[member]).
  std::vector<int> parent_node;
  std::vector<int> c_nodes;

  int size() const { return orbit.size(); }
  EdgeClass cls(int member, int node) const { return edge_class[member][node - 1]; }
  const OrthoSet& member(int m) const { return orbit.members[m]; }

  /// Letters i_1..i_s with B = r_{i_1}...r_{i_s} B0 descending one level per
  /// step, following the canonical parent edges.
  std::vector<int> min_word(int member) const;

  /// Members with no lowering edge (the minimal elements of the order).
  std::vector<int> minimal_members() const;
};

/// Builds the poset. Throws "orbit not admissible" when the admissibility
/// precondition fails, and an internal-consistency error if the maximal
/// member is not unique.
MonoidalPoset build_poset(const RootSystem& rs, OrbitData orbit);

const OrthoSet& maximal_element(const MonoidalPoset& p);

struct AxiomReport {
  bool pass = true;
  long long checks = 0;
  std::vector<std::string> failures;  // capped

  void fail(const std::string& what);
};

struct AxiomOptions {
  /// Full pairwise antisymmetry and triple transitivity of the comparison
  /// rule are checked only up to these member counts.
  int antisymmetry_cap = 2000;
  int transitivity_cap = 300;
  size_t max_failures = 16;
};

/// Exhaustively checks the order axioms on an admissible orbit: for every
/// member and every applicable node pair, each clause of the comparison /
/// raising-lowering calculus, the two equal-raise lemmas, the level
/// function, and the canonical-word properties.
AxiomReport verify_order_axioms(const MonoidalPoset& p, const AxiomOptions& opt = {});

/// DOT export: one node per member labeled with index, level and root set;
/// one directed edge B -> r_iB per raising pair, labeled i.
std::string poset_to_dot(const MonoidalPoset& p);

/// JSON export: the orbit dump plus {"b0": idx, "levels": [...],
/// "edge_class": [[...]...]}.
std::string poset_to_json(const MonoidalPoset& p);

}  // namespace orthoposet
