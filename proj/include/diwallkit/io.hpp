#pragma once

#include "diwallkit/didrawing.hpp"

#include <string>
#include <string_view>

namespace diwallkit {

/// Parses the JSON didrawing document
///   {"vertices": [...], "edges": [{"id","tail","head"}...],
///    "rotations": {vertex: ["edge:T", "edge:H", ...]}}
/// Rotations are clockwise. Syntax errors raise ParseError with the byte
/// offset; structural errors name the offending JSON path.
Didrawing parse_didrawing(std::string_view text);

/// Canonical serialization: vertices and edges sorted by id, every rotation
/// rotated to start at its lexicographically least dart token.
std::string write_didrawing(const Didrawing& g);

/// Graphviz export; arrowheads follow edge direction.
std::string write_dot(const Didrawing& g);

std::string dart_token(const Digraph& g, int dart);

} // namespace diwallkit
