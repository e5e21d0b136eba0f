#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ctab/value.hpp"

namespace ctab {

/// A named relation: declared arity plus a canonical set of positional tuples.
struct Relation {
    std::size_t arity = 0;
    std::vector<std::vector<Value>> tuples;  // sorted, duplicate-free
};

/// A finite relational structure: a base set plus named relations whose
/// tuples are drawn from the base.
class Structure {
public:
    /// Validates tuple lengths against arities and entries against the base.
    static Structure make(Base base, std::map<std::string, Relation> relations);

    const Base& base() const { return base_; }

    /// Looks up a relation; nullptr when absent.
    const Relation* relation(std::string_view name) const;

    const std::map<std::string, Relation>& relations() const {
        return relations_;
    }

private:
    Structure() = default;

    Base base_;
    std::map<std::string, Relation> relations_;
};

}  // namespace ctab
