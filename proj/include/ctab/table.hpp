#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "ctab/named_tuple.hpp"
#include "ctab/value.hpp"
#include "ctab/variable.hpp"

namespace ctab {

/// A table schema: either a finite variable set, or the all-variables marker
/// carried only by the empty table.
class Schema {
public:
    static Schema all() { return Schema(true, VarSet{}); }
    static Schema finite(VarSet vars) { return Schema(false, std::move(vars)); }

    bool is_all() const { return all_; }

    /// The finite variable set; must not be called on the all-variables schema.
    const VarSet& vars() const;

    /// "*" for the all-variables schema, else the variable set.
    std::string to_string() const;

    bool operator==(const Schema&) const = default;

private:
    Schema(bool all, VarSet vars) : all_(all), vars_(std::move(vars)) {}

    bool all_;
    VarSet vars_;
};

std::ostream& operator<<(std::ostream&, const Schema&);

/// A table: the unique empty table, or a finite schema with a nonempty
/// canonical row set over exactly that schema. Tables are immutable values;
/// equality is set equality because rows are kept sorted and deduplicated.
class Table {
public:
    /// The empty table (bottom element; schema = all variables).
    static Table empty() { return Table(); }

    /// {<>}: the one-row table over the empty schema (top element).
    static Table unit();

    /// Canonicalizing constructor. Every row's domain must equal the schema
    /// exactly (ConstructionError naming the offending row otherwise); an
    /// empty row list yields the empty table, discarding the schema.
    static Table make(VarSet schema, std::vector<NamedTuple> rows);

    bool is_empty() const { return rows_.empty(); }
    bool is_unit() const { return rows_.size() == 1 && schema_.empty(); }

    Schema schema() const;

    /// The finite schema of a nonempty table; throws on the empty table.
    const VarSet& columns() const;

    std::span<const NamedTuple> rows() const { return rows_; }
    std::size_t row_count() const { return rows_.size(); }
    bool contains_row(const NamedTuple& t) const;

    /// "EMPTY", "{()}", or "{x1 x2 | a b | b b}".
    std::string to_string() const;

    bool operator==(const Table&) const = default;

private:
    Table() = default;

    VarSet schema_;                 // empty for the empty table
    std::vector<NamedTuple> rows_;  // sorted, duplicate-free; empty iff empty table
};

std::ostream& operator<<(std::ostream&, const Table&);

/// Membership in the extension set of T: true iff T is nonempty, schema(T)
/// is contained in the domain of t, and t's restriction to schema(T) is a
/// row of T.
bool extends_member(const NamedTuple& t, const Table& T);

}  // namespace ctab
