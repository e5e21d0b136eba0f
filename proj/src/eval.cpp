#include "ctab/eval.hpp"

#include <map>
#include <optional>

#include "ctab/errors.hpp"

namespace ctab {

namespace {

std::string atom_text(const Formula& f) {
    std::string out = f.rel_name() + "(";
    auto args = f.rel_args();
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i > 0) out += ", ";
        out += args[i].name();
    }
    return out + ")";
}

const Relation& resolve_atom(const Formula& f, const Structure& structure) {
    const Relation* rel = structure.relation(f.rel_name());
    if (rel == nullptr)
        throw EvalError("unknown relation '" + f.rel_name() + "' in atom " +
                        atom_text(f));
    if (rel->arity != f.rel_args().size())
        throw EvalError("arity mismatch in atom " + atom_text(f) +
                        ": relation " + f.rel_name() + " has arity " +
                        std::to_string(rel->arity));
    return *rel;
}

// The named table of a relation atom: schema is the set of distinct argument
// variables; a positional tuple matches iff it induces a single consistent
// assignment.
Table atom_table(const Formula& f, const Structure& structure) {
    const Relation& rel = resolve_atom(f, structure);
    auto args = f.rel_args();
    VarSet schema(std::vector<Variable>(args.begin(), args.end()));
    std::vector<NamedTuple> rows;
    for (const auto& tuple : rel.tuples) {
        std::map<Variable, Value> assignment;
        bool consistent = true;
        for (std::size_t i = 0; i < args.size() && consistent; ++i) {
            auto [it, inserted] = assignment.emplace(args[i], tuple[i]);
            if (!inserted && it->second != tuple[i]) consistent = false;
        }
        if (!consistent) continue;
        std::vector<NamedTuple::Entry> entries(assignment.begin(),
                                               assignment.end());
        rows.push_back(NamedTuple::of(std::move(entries)));
    }
    return Table::make(std::move(schema), std::move(rows));
}

bool satisfies(const Formula& f, const Structure& structure,
               std::map<Variable, Value>& env) {
    switch (f.kind()) {
        case Formula::Kind::True:
            return true;
        case Formula::Kind::False:
            return false;
        case Formula::Kind::Eq:
            return env.at(f.eq_lhs()) == env.at(f.eq_rhs());
        case Formula::Kind::Rel: {
            const Relation& rel = resolve_atom(f, structure);
            std::vector<Value> tuple;
            tuple.reserve(rel.arity);
            for (Variable x : f.rel_args()) tuple.push_back(env.at(x));
            return std::binary_search(rel.tuples.begin(), rel.tuples.end(),
                                      tuple);
        }
        case Formula::Kind::And:
            return satisfies(f.and_lhs(), structure, env) &&
                   satisfies(f.and_rhs(), structure, env);
        case Formula::Kind::Exists: {
            Variable x = f.bound();
            auto it = env.find(x);
            std::optional<Value> saved;
            if (it != env.end()) saved = it->second;  // shadowed binding
            Formula body = f.body();
            for (const Value& witness : structure.base()) {
                env.insert_or_assign(x, witness);
                if (satisfies(body, structure, env)) {
                    if (saved)
                        env.insert_or_assign(x, *saved);
                    else
                        env.erase(x);
                    return true;
                }
            }
            if (saved)
                env.insert_or_assign(x, *saved);
            else
                env.erase(x);
            return false;
        }
    }
    return false;
}

}  // namespace

Table evaluate(const Formula& f, const Structure& structure,
               const TableAlgebra& alg) {
    if (alg.base() != structure.base())
        throw EvalError("algebra base " + alg.base().to_string() +
                        " differs from structure base " +
                        structure.base().to_string());
    switch (f.kind()) {
        case Formula::Kind::True:
            return Table::unit();
        case Formula::Kind::False:
            return Table::empty();
        case Formula::Kind::Eq:
            return alg.equality_table(f.eq_lhs(), f.eq_rhs());
        case Formula::Kind::Rel:
            return atom_table(f, structure);
        case Formula::Kind::And:
            return join(evaluate(f.and_lhs(), structure, alg),
                        evaluate(f.and_rhs(), structure, alg));
        case Formula::Kind::Exists:
            return delete_column(f.bound(),
                                 evaluate(f.body(), structure, alg));
    }
    throw EvalError("unreachable formula kind");
}

Table evaluate_oracle(const Formula& f, const Structure& structure) {
    VarSet free = f.free_variables();
    std::vector<NamedTuple> hits;
    for (const NamedTuple& t : enumerate_tuples(free, structure.base())) {
        std::map<Variable, Value> env;
        for (const auto& [x, v] : t.entries()) env.emplace(x, v);
        if (satisfies(f, structure, env)) hits.push_back(t);
    }
    return Table::make(std::move(free), std::move(hits));
}

}  // namespace ctab
