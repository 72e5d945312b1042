#pragma once

#include "boxfactor/graph.hpp"
#include "boxfactor/product.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace boxfactor {

// LGR: line-oriented text format for graphs with loops.
//
//   # comment
//   n <vertex count>
//   e <u> <v>        2-edge, u != v
//   l <v>            loop
//
// Ids are 0-based decimals. Blank lines are ignored.

/// Throws SyntaxError, IdOutOfRange, DuplicateRecord or SelfEdgeViaE, each
/// tagged with the offending line.
Graph parse_lgr(std::string_view text);

/// Canonical form: header, edges ascending with u < v, loops ascending.
std::string serialize_lgr(const Graph& g);

/// Coordinate table: one line per vertex, "v<TAB>c0<TAB>c1...".
std::string serialize_coords(const Coordinatization& c);

/// Parses a coordinate table against the given factor sizes. Throws
/// SyntaxError for malformed lines; returns nullopt if the rows do not form
/// a bijection onto the box (missing, repeated or out-of-range entries).
std::optional<Coordinatization> parse_coords(std::string_view text, std::size_t n,
                                             const std::vector<std::size_t>& sizes);

} // namespace boxfactor
