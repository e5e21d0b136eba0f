#pragma once

#include <compare>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ctab/value.hpp"
#include "ctab/variable.hpp"

namespace ctab {

/// A table row: a finite map from variables to values, stored in variable
/// order so that rows over a common schema compare value-lexicographically.
class NamedTuple {
public:
    using Entry = std::pair<Variable, Value>;

    /// The empty tuple <>.
    NamedTuple() = default;

    /// Builds from entries; rejects duplicate variables.
    static NamedTuple of(std::vector<Entry> entries);

    VarSet domain() const;
    bool has(Variable x) const;

    /// Entry lookup; throws DomainError if x is not in the domain.
    const Value& at(Variable x) const;
    const Value* find(Variable x) const;

    /// t|_X. Requires X ⊆ domain(t); throws DomainError naming the missing
    /// variables otherwise.
    NamedTuple restricted(const VarSet& X) const;

    /// Union of two tuples that agree on shared variables.
    NamedTuple merged(const NamedTuple& other) const;

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    std::span<const Entry> entries() const { return entries_; }

    /// "{x1=a, x2=b}"; the empty tuple prints as "()".
    std::string to_string() const;

    bool operator==(const NamedTuple&) const = default;
    auto operator<=>(const NamedTuple&) const = default;

private:
    std::vector<Entry> entries_;  // sorted by variable
};

std::ostream& operator<<(std::ostream&, const NamedTuple&);

}  // namespace ctab
