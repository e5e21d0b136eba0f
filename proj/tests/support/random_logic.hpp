#pragma once

// Random structures and conjunctive formulas for the evaluator equivalence
// tests: bases of size <= 3, at most two relations of arity <= 3, formulas of
// depth <= 4 drawing variables from a small pool so conjuncts share columns.

#include <string>
#include <vector>

#include "ctab/formula.hpp"
#include "ctab/laws.hpp"
#include "ctab/structure.hpp"

namespace ctab::testing {

using laws::Rng;

inline Structure gen_structure(Rng& rng) {
    static const std::string letters = "abc";
    std::size_t base_size = rng.chance(1, 20) ? 0 : 1 + rng.below(3);
    Base base = Base::letters(std::string_view(letters).substr(0, base_size));

    std::map<std::string, Relation> relations;
    std::size_t rel_count = rng.below(3);  // 0..2
    const char* names[] = {"R", "S"};
    for (std::size_t r = 0; r < rel_count; ++r) {
        Relation rel;
        rel.arity = 1 + rng.below(3);
        std::size_t tuple_count = rng.below(5);
        for (std::size_t i = 0; i < tuple_count && !base.empty(); ++i) {
            std::vector<Value> tuple;
            for (std::size_t j = 0; j < rel.arity; ++j)
                tuple.push_back(rng.pick(base.items()));
            rel.tuples.push_back(std::move(tuple));
        }
        relations.emplace(names[r], std::move(rel));
    }
    return Structure::make(std::move(base), std::move(relations));
}

inline Formula gen_formula(Rng& rng, const Structure& structure,
                           const VarSet& pool, int depth) {
    bool can_rel = !structure.relations().empty();
    std::uint64_t roll = rng.below(10);
    if (depth <= 0 || roll < 5) {
        // Atoms; variables repeat freely so joins and repeated-argument
        // relation atoms stay common.
        if (can_rel && roll % 2 == 0) {
            auto it = structure.relations().begin();
            std::advance(it, rng.below(structure.relations().size()));
            std::vector<Variable> args;
            for (std::size_t i = 0; i < it->second.arity; ++i)
                args.push_back(laws::gen_var(rng, pool));
            return Formula::rel(it->first, std::move(args));
        }
        if (roll == 1) return Formula::truth();
        if (roll == 3) return Formula::falsity();
        return Formula::eq(laws::gen_var(rng, pool), laws::gen_var(rng, pool));
    }
    if (roll < 8)
        return Formula::conj(gen_formula(rng, structure, pool, depth - 1),
                             gen_formula(rng, structure, pool, depth - 1));
    return Formula::exists(laws::gen_var(rng, pool),
                           gen_formula(rng, structure, pool, depth - 1));
}

}  // namespace ctab::testing
