#pragma once

#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "ctab/variable.hpp"

namespace ctab {

/// A primitive positive formula: relation and equality atoms combined with
/// conjunction and existential quantification, plus the constants true and
/// false. Immutable; nodes are shared.
class Formula {
public:
    enum class Kind { True, False, Eq, Rel, And, Exists };

    static Formula truth();
    static Formula falsity();
    static Formula eq(Variable x, Variable y);
    static Formula rel(std::string name, std::vector<Variable> args);
    static Formula conj(Formula lhs, Formula rhs);
    static Formula exists(Variable x, Formula body);

    Kind kind() const;

    Variable eq_lhs() const;
    Variable eq_rhs() const;
    const std::string& rel_name() const;
    std::span<const Variable> rel_args() const;
    Formula and_lhs() const;
    Formula and_rhs() const;
    Variable bound() const;
    Formula body() const;

    VarSet free_variables() const;

    /// Canonical print; parsing it back yields an equal formula.
    std::string to_string() const;

    bool operator==(const Formula& other) const;

    struct Node;  // opaque; nodes are created through the factories above

private:
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

std::ostream& operator<<(std::ostream&, const Formula&);

}  // namespace ctab
