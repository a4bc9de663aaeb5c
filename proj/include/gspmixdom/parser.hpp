#pragma once

#include <string>
#include <string_view>

#include "gspmixdom/model.hpp"

namespace gspmixdom {

/// Parses the construction language
///
///     tree := "e(" id "," id ")" | ("s" | "p" | "g") "(" tree "," tree ")"
///     id   := [A-Za-z0-9_]+
///
/// Whitespace between tokens is ignored and '#' starts a comment running to
/// the end of the line. Nesting depth is limited only by memory.
///
/// Throws ParseError on malformed text or on a composition that breaks the
/// terminal or disjointness rules.
ParseTree parse_expr(std::string_view source);

/// Canonical text of `tree`, without whitespace; parse_expr inverts it.
std::string format_expr(const ParseTree& tree);

}  // namespace gspmixdom
