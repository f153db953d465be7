#pragma once

#include <string>
#include <string_view>

#include "rcsub/lattice.hpp"
#include "rcsub/rc_closure.hpp"

namespace rcsub {

// Text format:
//
//   # comment
//   elements <n>
//   cover <i> <j>        (i is covered by j, any order, repeats allowed)
//
// Blank lines and '#' comments may appear anywhere; `elements` must be the
// first directive. Throws ParseError with a 1-based line number; order errors
// (NotALattice, CycleDetected) come straight from Lattice::from_covers.
Lattice parse_lattice(std::string_view text);

// "elements <n>\n" followed by one "cover <i> <j>\n" line per cover, sorted.
std::string serialize_lattice(const Lattice& L);

// Graphviz digraph of the cover relation, edges pointing upwards with the
// bottom on the minimum rank.
std::string export_dot(const Lattice& L, std::string_view name = "lattice");
// Nodes are labelled with their member sets.
std::string export_dot(const ClosureFamily& family, std::string_view name = "rcsub");

} // namespace rcsub
