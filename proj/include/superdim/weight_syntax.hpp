#pragma once

// Textual weight syntax "c1,c2,...|d1,...,dn".  The bar is mandatory and the
// right side may be empty (n = 0).  Shape is inferred from the token counts.
// Whitespace around tokens is ignored; format() and parse() round-trip.

#include <string>

#include "superdim/weights.hpp"

namespace superdim {

SuperWeight parse_weight(const std::string& text);
std::string format_weight(const SuperWeight& w);

}  // namespace superdim
