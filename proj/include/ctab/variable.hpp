#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace ctab {

/// A column variable. The variable pool is countable with a fixed total
/// enumeration order given by the id; the k-th variable has the canonical
/// name "x<k>". Other display names are interned bijectively onto ids from
/// a disjoint high range (starting at 2^32), so a user name can never
/// collide with a canonical reference.
class Variable {
public:
    /// The k-th variable of the fixed enumeration (k >= 1).
    static Variable indexed(std::uint64_t k);

    /// Intern a display name. "x<k>" (no leading zero) is canonical and
    /// resolves to indexed(k); any other well-formed name gets a stable
    /// fresh id on first use.
    static Variable named(std::string_view name);

    std::uint64_t id() const { return id_; }

    /// Registered display name, or the canonical "x<id>".
    std::string name() const;

    auto operator<=>(const Variable&) const = default;

private:
    explicit Variable(std::uint64_t id) : id_(id) {}

    std::uint64_t id_;
};

std::ostream& operator<<(std::ostream&, const Variable&);

/// A finite set of variables, kept sorted by enumeration id.
class VarSet {
public:
    VarSet() = default;
    VarSet(std::initializer_list<Variable> vars);
    explicit VarSet(std::vector<Variable> vars);

    bool contains(Variable x) const;
    bool subset_of(const VarSet& other) const;

    VarSet unioned(const VarSet& other) const;
    VarSet intersected(const VarSet& other) const;
    VarSet minus(const VarSet& other) const;
    VarSet with(Variable x) const;
    VarSet without(Variable x) const;

    std::size_t size() const { return vars_.size(); }
    bool empty() const { return vars_.empty(); }

    auto begin() const { return vars_.begin(); }
    auto end() const { return vars_.end(); }
    const std::vector<Variable>& items() const { return vars_; }

    /// "{x1, x2}" ("{}" when empty).
    std::string to_string() const;

    bool operator==(const VarSet&) const = default;
    auto operator<=>(const VarSet&) const = default;

private:
    std::vector<Variable> vars_;  // sorted, duplicate-free
};

std::ostream& operator<<(std::ostream&, const VarSet&);

/// The `count` smallest-id variables outside `avoid`, skipping `offset`
/// further candidates first. Deterministic in all arguments.
std::vector<Variable> fresh_variables(const VarSet& avoid, std::size_t count,
                                      std::size_t offset = 0);

}  // namespace ctab

template <>
struct std::hash<ctab::Variable> {
    std::size_t operator()(const ctab::Variable& v) const noexcept {
        return std::hash<std::uint64_t>{}(v.id());
    }
};
