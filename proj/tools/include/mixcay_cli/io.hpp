#pragma once

#include <string>
#include <string_view>

#include "mixcay/atoms.hpp"
#include "mixcay/class_algebra.hpp"
#include "mixcay/context.hpp"

namespace mixcay::cli {

/// "a+bi" with six decimals, e.g. "-0.500000+0.866025i".
std::string format_complex(Complex z);
/// Accepts "a+bi", "a-bi", "bi" and plain reals. Throws BadInput.
Complex parse_complex(std::string_view text);

/// Header "character,<rep label>,..." then one row per character.
std::string character_table_csv(const GroupContext& ctx);
/// Reads a table in the format written by `character_table_csv`. Throws
/// BadInput on malformed input.
CharacterTable read_character_table_csv(const std::string& path);

/// Set tokens separated by ';': "Cl[label]" (whole class), "#index" or an
/// element label. Empty text is the empty set. Throws BadInput.
ElementSet parse_set(const Group& group, const ClassData& classes, std::string_view text);

/// Graphviz digraph: arcs for the skew part, dir=none edges for the
/// symmetric part (each unordered pair once).
std::string to_dot(const Group& group, const ConnectionSet& set, const std::string& title);

std::string csv_field(std::string_view text);

}  // namespace mixcay::cli
