#pragma once

#include <string>
#include <string_view>

#include "ctab/structure.hpp"
#include "ctab/table.hpp"

namespace ctab {

/// Machine format: a tab-separated header of variable names in enumeration
/// order followed by one tab-separated line per row in canonical order. The
/// empty table is the single line "EMPTY schema=*"; the one-row table over
/// the empty schema is the single line "()".
std::string to_tsv(const Table& T);

/// Exact inverse of to_tsv (for values free of tabs and newlines).
Table parse_tsv(std::string_view text);

/// Aligned human-readable rendering; same markers for the two degenerate
/// tables.
std::string to_pretty(const Table& T);

/// Parses the line-oriented structure format ('#' starts a comment):
///
///   base: a b c
///   rel R/2: (a,b) (b,c)
///
/// The base line must come before any relation line.
Structure parse_structure(std::string_view text);

Structure load_structure_file(const std::string& path);

}  // namespace ctab
