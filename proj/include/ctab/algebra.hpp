#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ctab/table.hpp"

namespace ctab {

using VarPair = std::pair<Variable, Variable>;

/// All tuples of G^X in canonical order (the X-slice of the table space).
std::vector<NamedTuple> enumerate_tuples(const VarSet& X, const Base& G);

/// Natural join. Hash-partitions on the shared columns; the empty table is
/// absorbing, {<>} is neutral.
Table join(const Table& T1, const Table& T2);

/// Deletes the x-column if present, otherwise leaves T unchanged; the empty
/// table stays empty.
Table delete_column(Variable x, const Table& T);

/// Iterated single-column deletion; the order does not matter.
Table delete_columns(const VarSet& Z, const Table& T);

/// Keeps exactly the columns Y. For a nonempty table Y must be contained in
/// the schema (SchemaError listing the extra variables otherwise).
Table project(const VarSet& Y, const Table& T);

/// Rows with equal x- and y-entries. For a nonempty table both variables
/// must be columns.
Table select_eq(Variable x, Variable y, const Table& T);

/// The table order: T1 <= T2 iff T1 = T1 ⋈ T2.
bool table_leq(const Table& T1, const Table& T2);

/// Schema as a function (the all-variables marker for the empty table).
Schema dom(const Table& T);

/// {x in probe | delete_column(x, T) != T}.
VarSet dim(const Table& T, const VarSet& probe);

/// dim probed over the schema plus two fresh variables.
VarSet dim(const Table& T);

/// The operation family of the table space over a fixed base G. Everything
/// that materializes base values (equality tables and the operations derived
/// from them) lives here; outputs only ever draw values from the inputs and
/// from G.
class TableAlgebra {
public:
    explicit TableAlgebra(Base base) : base_(std::move(base)) {}

    const Base& base() const { return base_; }

    Table bottom() const { return Table::empty(); }
    Table top() const { return Table::unit(); }

    /// E_xy = {t in G^{x,y} | t(x) = t(y)}; single-column when x = y; the
    /// empty base yields the empty table.
    Table equality_table(Variable x, Variable y) const;

    /// Generalized equality table: the join of E_xy over all pairs; the
    /// empty pair set yields {<>}.
    Table equality_table(std::span<const VarPair> pairs) const;

    /// Adds a column y that copies column x. Requires x != y; for a nonempty
    /// table, x must be a column and y must not.
    Table duplicate(Variable x, Variable y, const Table& T) const;

    /// Renames column x to y (delete after duplicate). Same preconditions as
    /// duplicate.
    Table rename(Variable x, Variable y, const Table& T) const;

    /// Rows whose x-entry equals g. g must belong to the base; for a
    /// nonempty table, x must be a column. Not an operation the algebra is
    /// closed under; provided for the SPJR comparison.
    Table select_const(Variable x, const Value& g, const Table& T) const;

private:
    Base base_;
};

}  // namespace ctab
