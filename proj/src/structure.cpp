#include "ctab/structure.hpp"

#include <algorithm>

#include "ctab/errors.hpp"

namespace ctab {

Structure Structure::make(Base base, std::map<std::string, Relation> relations) {
    for (auto& [name, rel] : relations) {
        for (const auto& tuple : rel.tuples) {
            if (tuple.size() != rel.arity)
                throw ConstructionError(
                    "relation " + name + " declared with arity " +
                    std::to_string(rel.arity) + " but given a tuple of length " +
                    std::to_string(tuple.size()));
            for (const Value& v : tuple) {
                if (!base.contains(v))
                    throw ConstructionError("relation " + name +
                                            " contains value '" + v.text() +
                                            "' outside the base");
            }
        }
        std::sort(rel.tuples.begin(), rel.tuples.end());
        rel.tuples.erase(std::unique(rel.tuples.begin(), rel.tuples.end()),
                         rel.tuples.end());
    }
    Structure s;
    s.base_ = std::move(base);
    s.relations_ = std::move(relations);
    return s;
}

const Relation* Structure::relation(std::string_view name) const {
    auto it = relations_.find(std::string(name));
    return it == relations_.end() ? nullptr : &it->second;
}

}  // namespace ctab
