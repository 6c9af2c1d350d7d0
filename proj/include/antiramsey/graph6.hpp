#pragma once

#include "antiramsey/graph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace antiramsey {

// graph6: printable-ASCII encoding of the upper triangle, six bits per byte.
// Orders up to 258047 use the one- and four-byte size headers; larger orders
// use the eight-byte form.

std::string encodeGraph6(const Graph& g);

/// Throws ParseError carrying the byte offset of the first bad byte.
/// An optional ">>graph6<<" prefix is accepted.
Graph decodeGraph6(std::string_view text);

/// One graph per non-empty line.
std::vector<Graph> readGraph6(std::istream& in);
void writeGraph6(std::ostream& out, const Graph& g);

}  // namespace antiramsey
