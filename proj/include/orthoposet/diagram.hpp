#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace orthoposet {

enum class Family : char { A = 'A', D = 'D', E = 'E' };

/// A connected simply laced Dynkin diagram, identified by family and rank.
/// Node labels are 1-based and follow the Bourbaki convention:
///   A_n : 1 - 2 - ... - n
///   D_n : 1 - 2 - ... - (n-2) with both (n-1) and n attached to (n-2)
///   E_n : chain 1 - 3 - 4 - 5 - 6 [- 7 [- 8]] with 2 attached to 4
struct DiagramType {
  Family family = Family::A;
  int rank = 0;

  /// Parses names such as "A3", "D5", "E8". Throws std::invalid_argument
  /// on malformed input or unsupported rank ("unsupported diagram").
  static DiagramType parse(const std::string& name);

  std::string name() const;

  /// Rank constraints: A: n >= 1, D: n >= 4, E: n in {6,7,8}.
  bool valid() const;

  /// Number of positive roots: A_n: n(n+1)/2, D_n: n(n-1), E6/E7/E8: 36/63/120.
  int positive_root_count() const;

  /// Order of the Weyl group: A_n: (n+1)!, D_n: 2^(n-1) n!, E6: 51840,
  /// E7: 2903040, E8: 696729600.
  long long weyl_order() const;

  /// Unordered diagram edges as 1-based node pairs (i < j).
  std::vector<std::pair<int, int>> edges() const;

  bool adjacent(int i, int j) const;

  bool operator==(const DiagramType& o) const {
    return family == o.family && rank == o.rank;
  }
};

/// Classifies a simply laced Coxeter graph given by an adjacency structure
/// into its connected components and returns a canonical type name such as
/// "A2", "A1+D4" or "empty". Components are normalized (D2 -> A1+A1,
/// D3 -> A3) and sorted by (family, rank). Throws if a component is not of
/// type A, D or E.
std::string classify_simply_laced(int node_count,
                                  const std::vector<std::vector<int>>& adj);

}  // namespace orthoposet
