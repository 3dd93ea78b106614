#pragma once

#include <string>

#include "orthoposet/orbit.hpp"
#include "orthoposet/root_system.hpp"

namespace orthoposet {

/// Parses a root literal into a positive-root index. Two grammars:
///   - simple-root combinations: "a1+2*a4+a5" (also "2a4"),
///   - epsilon form for types A and D: "e1+e2", "e3-e4".
/// The two symbol kinds cannot be mixed within one literal. Throws
/// std::invalid_argument if the expression is not a positive root of the
/// ambient system.
int parse_root(const RootSystem& rs, const std::string& text);

/// Parses a comma-separated list of root literals into a canonical
/// OrthoSet (sorted, validated for mutual orthogonality).
OrthoSet parse_root_list(const RootSystem& rs, const std::string& text);

}  // namespace orthoposet
